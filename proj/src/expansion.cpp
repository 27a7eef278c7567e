#include "ramsey/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

std::size_t neighbourhood_size(const Graph& g, const std::vector<Vertex>& x) {
  std::vector<char> in_x(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : x) in_x[v] = 1;
  std::size_t count = 0;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
      }
  // N(X) here is the set of vertices adjacent to X (X-members included when
  // they have a neighbour in X), matching the expansion definition in use.
  (void)in_x;
  return count;
}

}  // namespace

ExpansionReport expansion_check(const Graph& g, int s, double d, const SplitRng& rng,
                                int probes) {
  require(s >= 1, ErrorCode::invalid_argument, "expansion needs s >= 1");
  ExpansionReport report;
  const Vertex n = g.vertex_count();
  const int cap = std::min<int>(s, n);

  auto test = [&](const std::vector<Vertex>& x) {
    std::size_t nb = neighbourhood_size(g, x);
    if (static_cast<double>(nb) < d * static_cast<double>(x.size()) - 1e-12) {
      report.witness = x;
      report.witness_neighbourhood = nb;
      return true;
    }
    return false;
  };

  bool exhaustive = (s <= 3 && n <= 2000) || n <= 20;
  if (exhaustive) {
    report.certified = true;
    if (n <= 20) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > cap) continue;
        std::vector<Vertex> x;
        for (Vertex v = 0; v < n; ++v)
          if (mask & (1u << v)) x.push_back(v);
        if (test(x)) return report;
      }
    } else {
      for (Vertex a = 0; a < n; ++a) {
        if (test({a})) return report;
        if (cap < 2) continue;
        for (Vertex b = a + 1; b < n; ++b) {
          if (test({a, b})) return report;
          if (cap < 3) continue;
          for (Vertex c = b + 1; c < n; ++c)
            if (test({a, b, c})) return report;
        }
      }
    }
    report.pass = true;
    return report;
  }

  SplitRng stream = rng.fork(SplitRng::kWitnessSearch, 3);
  for (int probe = 0; probe < probes; ++probe) {
    int size = 1 + static_cast<int>(stream.next_below(cap));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < size; ++i)
      std::swap(perm[i], perm[i + stream.next_below(n - i)]);
    std::vector<Vertex> x(perm.begin(), perm.begin() + size);
    // Greedy shrink: drop the vertex whose removal most lowers the ratio.
    if (test(x)) return report;
    for (int round = 0; round < size && x.size() > 1; ++round) {
      std::size_t best_nb = ~0ull;
      int best_drop = -1;
      for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<Vertex> y = x;
        y.erase(y.begin() + i);
        std::size_t nb = neighbourhood_size(g, y);
        if (nb < best_nb) {
          best_nb = nb;
          best_drop = static_cast<int>(i);
        }
      }
      x.erase(x.begin() + best_drop);
      if (test(x)) return report;
    }
  }
  report.pass = true;  // non-certificate
  return report;
}

PruneResult prune_to_expander(const Graph& g, int s, double k_factor, const SplitRng& rng) {
  PruneResult result;
  const Vertex n = g.vertex_count();
  // Hypothesis probe: |N(X)| >= 3 K s for sets of size exactly s. Exhaustive
  // for n <= 20, sampled otherwise.
  {
    double need = 3.0 * k_factor * static_cast<double>(s);
    result.hypothesis_ok = true;
    SplitRng stream = rng.fork(SplitRng::kProbe, 17);
    auto size_s_ok = [&](const std::vector<Vertex>& x) {
      return static_cast<double>(neighbourhood_size(g, x)) >= need - 1e-12;
    };
    if (n <= 20) {
      for (std::uint32_t mask = 1; mask < (1u << n) && result.hypothesis_ok; ++mask) {
        if (std::popcount(mask) != std::min<int>(s, n)) continue;
        std::vector<Vertex> x;
        for (Vertex v = 0; v < n; ++v)
          if (mask & (1u << v)) x.push_back(v);
        result.hypothesis_ok = size_s_ok(x);
      }
    } else {
      for (int probe = 0; probe < 500 && result.hypothesis_ok; ++probe) {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        int size = std::min<int>(s, n);
        for (int i = 0; i < size; ++i)
          std::swap(perm[i], perm[i + stream.next_below(n - i)]);
        result.hypothesis_ok = size_s_ok({perm.begin(), perm.begin() + size});
      }
    }
  }

  std::vector<char> alive(n, 1);
  std::vector<Vertex> removed;
  for (;;) {
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v]) kept.push_back(v);
    std::vector<Vertex> relabel_ids;
    // Build induced subgraph on kept vertices.
    std::vector<Vertex> relabel(n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) relabel[kept[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
      if (relabel[u] >= 0 && relabel[v] >= 0) edges.push_back({relabel[u], relabel[v]});
    Graph sub(static_cast<Vertex>(kept.size()), std::move(edges));

    auto report = expansion_check(sub, s, k_factor, rng);
    if (report.pass) {
      result.kept = kept;
      result.removed = removed;
      result.success = true;
      return result;
    }
    for (Vertex v : report.witness) {
      alive[kept[v]] = 0;
      removed.push_back(kept[v]);
    }
    std::sort(removed.begin(), removed.end());
    if (static_cast<int>(removed.size()) >= s) {
      result.kept.clear();
      for (Vertex v = 0; v < n; ++v)
        if (alive[v]) result.kept.push_back(v);
      result.removed = removed;
      result.success = false;
      return result;
    }
    (void)relabel_ids;
  }
}

JointReport alpha_joint_check(const Graph& g, double alpha, const SplitRng& rng,
                              int probes) {
  require(alpha > 0.0 && alpha <= 0.5, ErrorCode::invalid_argument,
          "alpha outside (0, 1/2]");
  JointReport report;
  const Vertex n = g.vertex_count();
  const int size = std::max(1, static_cast<int>(std::ceil(alpha * n - 1e-12)));

  auto no_edge_between = [&](const std::vector<Vertex>& s_set,
                             const std::vector<Vertex>& complement_pool) {
    // Witness T must avoid N(S); collect the complement of S u N(S).
    std::vector<char> blocked(n, 0);
    for (Vertex v : s_set) blocked[v] = 1;
    for (Vertex v : s_set)
      for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    std::vector<Vertex> t_pool;
    for (Vertex v : complement_pool)
      if (!blocked[v]) t_pool.push_back(v);
    if (static_cast<int>(t_pool.size()) >= size) {
      report.pass = false;
      report.witness_s = s_set;
      report.witness_t.assign(t_pool.begin(), t_pool.begin() + size);
      return true;
    }
    return false;
  };

  std::vector<Vertex> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);

  if (n <= 20) {
    report.certified = true;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<Vertex> s_set;
      for (Vertex v = 0; v < n; ++v)
        if (mask & (1u << v)) s_set.push_back(v);
      if (no_edge_between(s_set, everyone)) return report;
    }
    report.pass = true;
    return report;
  }

  SplitRng stream = rng.fork(SplitRng::kWitnessSearch, 4);
  for (int probe = 0; probe < probes; ++probe) {
    std::vector<Vertex> perm = everyone;
    for (int i = 0; i < size; ++i)
      std::swap(perm[i], perm[i + stream.next_below(n - i)]);
    std::vector<Vertex> s_set(perm.begin(), perm.begin() + size);
    if (no_edge_between(s_set, everyone)) return report;
  }
  report.pass = true;  // non-certificate
  return report;
}

}  // namespace ramsey
