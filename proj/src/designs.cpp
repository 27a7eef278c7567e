#include "ramsey/designs.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

std::vector<Vertex> sorted_block(std::initializer_list<Vertex> pts) {
  std::vector<Vertex> b(pts);
  std::sort(b.begin(), b.end());
  return b;
}

// Bose: points Z_m x {0,1,2} with m = 2t+1, built from the idempotent
// commutative quasigroup x*y = (t+1)(x+y) mod m.
BlockDesign bose_triples(Vertex n) {
  Vertex m = n / 3;
  Vertex half = (m + 1) / 2;  // (t+1), the multiplicative inverse of 2 mod m
  auto point = [m](Vertex x, Vertex level) { return level * m + x; };
  BlockDesign d;
  d.n = n;
  d.block_size = 3;
  for (Vertex x = 0; x < m; ++x)
    d.blocks.push_back(sorted_block({point(x, 0), point(x, 1), point(x, 2)}));
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y = x + 1; y < m; ++y) {
      Vertex q = static_cast<Vertex>((static_cast<std::int64_t>(half) * (x + y)) % m);
      for (Vertex level = 0; level < 3; ++level)
        d.blocks.push_back(
            sorted_block({point(x, level), point(y, level), point(q, (level + 1) % 3)}));
    }
  return d;
}

// Skolem: points {infinity} u (Z_{2t} x {0,1,2}) with the half-idempotent
// commutative quasigroup x*y = f(x+y mod 2t), f(2k) = k, f(2k+1) = k+t.
BlockDesign skolem_triples(Vertex n) {
  Vertex t = (n - 1) / 6;
  Vertex m = 2 * t;
  const Vertex infinity = n - 1;
  auto point = [m](Vertex x, Vertex level) { return level * m + x; };
  auto f = [t](Vertex z) { return (z % 2 == 0) ? z / 2 : z / 2 + t; };
  BlockDesign d;
  d.n = n;
  d.block_size = 3;
  for (Vertex x = 0; x < t; ++x)
    d.blocks.push_back(sorted_block({point(x, 0), point(x, 1), point(x, 2)}));
  for (Vertex x = 0; x < t; ++x)
    for (Vertex level = 0; level < 3; ++level)
      d.blocks.push_back(
          sorted_block({infinity, point(x + t, level), point(x, (level + 1) % 3)}));
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y = x + 1; y < m; ++y) {
      Vertex q = f((x + y) % m);
      for (Vertex level = 0; level < 3; ++level)
        d.blocks.push_back(
            sorted_block({point(x, level), point(y, level), point(q, (level + 1) % 3)}));
    }
  return d;
}

bool is_prime(Vertex q) {
  if (q < 2) return false;
  for (Vertex d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

BlockDesign steiner_triple(Vertex n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3))
    fail(ErrorCode::no_triple_system,
         "no-triple-system: S(2,3,n) requires n = 1 or 3 (mod 6) and n >= 7, got n = " +
             std::to_string(n));
  BlockDesign d = (n % 6 == 3) ? bose_triples(n) : skolem_triples(n);
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

BlockDesign affine_plane(Vertex q) {
  if (!is_prime(q))
    fail(ErrorCode::prime_required,
         "prime-required: affine plane supported for prime order only, got q = " +
             std::to_string(q));
  auto point = [q](Vertex x, Vertex y) { return x * q + y; };
  BlockDesign d;
  d.n = q * q;
  d.block_size = q;
  // Keep (class label, block) pairs through the canonical sort.
  std::vector<std::pair<int, std::vector<Vertex>>> labelled;
  for (Vertex a = 0; a < q; ++a)  // slope classes y = ax + b
    for (Vertex b = 0; b < q; ++b) {
      std::vector<Vertex> line;
      for (Vertex x = 0; x < q; ++x) line.push_back(point(x, (a * x + b) % q));
      std::sort(line.begin(), line.end());
      labelled.emplace_back(a, std::move(line));
    }
  for (Vertex c = 0; c < q; ++c) {  // vertical class x = c
    std::vector<Vertex> line;
    for (Vertex y = 0; y < q; ++y) line.push_back(point(c, y));
    std::sort(line.begin(), line.end());
    labelled.emplace_back(q, std::move(line));
  }
  std::sort(labelled.begin(), labelled.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.second < rhs.second; });
  std::vector<std::vector<int>> classes(q + 1);
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    classes[labelled[i].first].push_back(static_cast<int>(i));
    d.blocks.push_back(std::move(labelled[i].second));
  }
  d.parallel_classes = std::move(classes);
  return d;
}

DesignReport validate_design(const BlockDesign& d) {
  DesignReport report;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& block = d.blocks[i];
    bool ok = static_cast<int>(block.size()) == d.block_size;
    std::vector<Vertex> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    ok = ok && (sorted.empty() || (sorted.front() >= 0 && sorted.back() < d.n));
    if (!ok) report.block_size_violations.push_back(static_cast<int>(i));
  }

  // Flat triangular pair-multiplicity table; at n = 1000 this is ~0.5M cells.
  auto pair_slot = [n = static_cast<std::size_t>(d.n)](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
  };
  std::vector<std::uint16_t> coverage(static_cast<std::size_t>(d.n) * (d.n - 1) / 2, 0);
  for (const auto& block : d.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        auto& slot = coverage[pair_slot(block[i], block[j])];
        if (slot < 0xffff) ++slot;
      }
  for (Vertex u = 0; u < d.n; ++u)
    for (Vertex v = u + 1; v < d.n; ++v) {
      int mult = coverage[pair_slot(u, v)];
      if (mult != 1) report.pair_violations.emplace_back(u, v, mult);
    }

  report.block_count_matches = d.blocks.size() == d.expected_block_count();

  if (d.parallel_classes.has_value()) {
    for (std::size_t c = 0; c < d.parallel_classes->size(); ++c) {
      std::vector<char> hit(d.n, 0);
      std::size_t covered = 0;
      bool disjoint = true;
      for (int bi : (*d.parallel_classes)[c]) {
        for (Vertex p : d.blocks[bi]) {
          if (hit[p]) disjoint = false;
          else {
            hit[p] = 1;
            ++covered;
          }
        }
      }
      if (!disjoint) report.class_disjointness_violations.push_back(static_cast<int>(c));
      report.class_coverage.push_back(covered);
    }
  }
  return report;
}

}  // namespace ramsey
