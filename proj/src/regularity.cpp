#include "ramsey/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

std::int64_t edges_between(const Graph& g, const std::vector<Vertex>& a,
                           const std::vector<Vertex>& b) {
  std::vector<char> in_b(g.vertex_count(), 0);
  for (Vertex v : b) in_b[v] = 1;
  std::int64_t count = 0;
  for (Vertex u : a)
    for (Vertex w : g.neighbors(u)) count += in_b[w];
  return count;
}

// Violation predicate in exact arithmetic on the edge counts:
// |e1 / (s1 s2) - e0 / (n1 n2)| > eps * p  <=>
// |e1 n1 n2 - e0 s1 s2| > eps p s1 s2 n1 n2.
bool violates(std::int64_t e_sub, std::int64_t s1, std::int64_t s2, std::int64_t e_all,
              std::int64_t n1, std::int64_t n2, double eps_p) {
  double lhs = std::fabs(static_cast<double>(e_sub * n1 * n2 - e_all * s1 * s2));
  double rhs = eps_p * static_cast<double>(s1 * s2) * static_cast<double>(n1 * n2);
  return lhs > rhs;
}

int min_subset_size(double eps, std::size_t n) {
  double raw = eps * static_cast<double>(n);
  int m = static_cast<int>(std::ceil(raw - 1e-12));
  return std::max(1, m);
}

}  // namespace

Rational pair_density(const Graph& g, const std::vector<Vertex>& a,
                      const std::vector<Vertex>& b) {
  require(!a.empty() && !b.empty(), ErrorCode::empty_part, "empty-part in pair_density");
  for (Vertex u : a)
    for (Vertex v : b)
      require(u != v, ErrorCode::invalid_argument, "pair_density sets must be disjoint");
  return Rational(edges_between(g, a, b),
                  static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()));
}

namespace {

constexpr int kExactSideCap = 16;

// Exact witness search; returns true and fills the report on violation.
bool exact_witness(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                   double eps, double p_scale, RegularPairReport& report) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const std::int64_t e_all = edges_between(g, a, b);
  const double eps_p = eps * p_scale;
  const int a_min = min_subset_size(eps, a.size());
  const int b_min = min_subset_size(eps, b.size());

  // Adjacency rows of B-vertices as bitmasks over A indices.
  std::vector<std::uint32_t> row(nb, 0);
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < na; ++i)
      if (g.has_edge(b[j], a[i])) row[j] |= (1u << i);

  std::vector<std::pair<int, int>> degree_order(nb);  // (deg, index)
  std::vector<std::int64_t> prefix(nb + 1, 0);
  for (std::uint32_t mask = 1; mask < (1u << na); ++mask) {
    int s1 = std::popcount(mask);
    if (s1 < a_min) continue;
    for (int j = 0; j < nb; ++j)
      degree_order[j] = {std::popcount(row[j] & mask), j};
    std::sort(degree_order.begin(), degree_order.end());
    for (int j = 0; j < nb; ++j) prefix[j + 1] = prefix[j] + degree_order[j].first;
    for (int s2 = b_min; s2 <= nb; ++s2) {
      // Bottom s2 degrees minimize the density, top s2 maximize it.
      std::int64_t low = prefix[s2];
      std::int64_t high = prefix[nb] - prefix[nb - s2];
      bool low_bad = violates(low, s1, s2, e_all, na, nb, eps_p);
      bool high_bad = violates(high, s1, s2, e_all, na, nb, eps_p);
      if (!low_bad && !high_bad) continue;
      bool use_low = low_bad;
      std::int64_t e_sub = use_low ? low : high;
      report.verdict = RegularPairReport::Verdict::irregular_with_witness;
      report.witness_a.clear();
      for (int i = 0; i < na; ++i)
        if (mask & (1u << i)) report.witness_a.push_back(a[i]);
      report.witness_b.clear();
      for (int s = 0; s < s2; ++s) {
        int j = use_low ? degree_order[s].second : degree_order[nb - 1 - s].second;
        report.witness_b.push_back(b[j]);
      }
      std::sort(report.witness_b.begin(), report.witness_b.end());
      report.witness_density =
          static_cast<double>(e_sub) / (static_cast<double>(s1) * static_cast<double>(s2));
      return true;
    }
  }
  return false;
}

bool randomized_witness(const Graph& g, const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b, double eps, double p_scale, int trials,
                        SplitRng& rng, RegularPairReport& report) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const std::int64_t e_all = edges_between(g, a, b);
  const double eps_p = eps * p_scale;
  const int a_min = min_subset_size(eps, a.size());
  const int b_min = min_subset_size(eps, b.size());
  const double d_all = static_cast<double>(e_all) / (static_cast<double>(na) * nb);

  std::vector<int> b_slot(g.vertex_count(), -1);
  for (int j = 0; j < nb; ++j) b_slot[b[j]] = j;

  for (int trial = 0; trial < trials; ++trial) {
    int s1 = a_min + static_cast<int>(rng.next_below(na - a_min + 1));
    int s2 = b_min + static_cast<int>(rng.next_below(nb - b_min + 1));
    // Random U1; U2 is then chosen greedily as the top or bottom s2 B-vertices
    // by degree into U1, alternating the direction between trials.
    std::vector<int> perm(na);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < s1; ++i)
      std::swap(perm[i], perm[i + rng.next_below(na - i)]);
    std::vector<char> chosen_a(na, 0);
    for (int i = 0; i < s1; ++i) chosen_a[perm[i]] = 1;
    bool maximize = trial % 2 == 0;

    std::vector<int> deg(nb, 0);
    for (int i = 0; i < na; ++i) {
      if (!chosen_a[i]) continue;
      for (Vertex w : g.neighbors(a[i])) {
        int j = b_slot[w];
        if (j >= 0) ++deg[j];
      }
    }
    std::vector<int> order(nb);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return maximize ? deg[x] > deg[y] : deg[x] < deg[y];
    });
    std::int64_t e_sub = 0;
    for (int s = 0; s < s2; ++s) e_sub += deg[order[s]];
    if (violates(e_sub, s1, s2, e_all, na, nb, eps_p)) {
      report.verdict = RegularPairReport::Verdict::irregular_with_witness;
      for (int i = 0; i < na; ++i)
        if (chosen_a[i]) report.witness_a.push_back(a[i]);
      for (int s = 0; s < s2; ++s) report.witness_b.push_back(b[order[s]]);
      std::sort(report.witness_b.begin(), report.witness_b.end());
      report.witness_density = static_cast<double>(e_sub) / (static_cast<double>(s1) * s2);
      report.randomized_trials = trial + 1;
      return true;
    }
    (void)d_all;
  }
  report.randomized_trials = trials;
  return false;
}

}  // namespace

RegularPairReport regularity_check(const Graph& g, const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b, double eps, double p_scale,
                                   RegularityMode mode, const SplitRng& rng,
                                   int randomized_trials) {
  require(eps > 0.0 && eps <= 1.0, ErrorCode::invalid_argument, "eps outside (0,1]");
  require(p_scale > 0.0 && p_scale <= 1.0, ErrorCode::invalid_argument,
          "p_scale outside (0,1]");
  require(!a.empty() && !b.empty(), ErrorCode::empty_part, "empty-part in regularity_check");
  RegularPairReport report;
  report.set_a = a;
  report.set_b = b;
  report.epsilon = eps;
  report.p_scale = p_scale;
  report.density = pair_density(g, a, b).value();
  report.mode = mode;
  if (mode == RegularityMode::exact) {
    if (static_cast<int>(a.size()) > kExactSideCap ||
        static_cast<int>(b.size()) > kExactSideCap) {
      report.verdict = RegularPairReport::Verdict::search_capped;
      return report;
    }
    exact_witness(g, a, b, eps, p_scale, report);
  } else {
    SplitRng stream = rng.fork(SplitRng::kWitnessSearch);
    randomized_witness(g, a, b, eps, p_scale, randomized_trials, stream, report);
  }
  return report;
}

bool witness_violates(const Graph& g, const RegularPairReport& report) {
  if (report.verdict != RegularPairReport::Verdict::irregular_with_witness) return false;
  std::int64_t e_sub = edges_between(g, report.witness_a, report.witness_b);
  std::int64_t e_all = edges_between(g, report.set_a, report.set_b);
  double min_a = report.epsilon * static_cast<double>(report.set_a.size());
  double min_b = report.epsilon * static_cast<double>(report.set_b.size());
  if (static_cast<double>(report.witness_a.size()) + 1e-12 < min_a) return false;
  if (static_cast<double>(report.witness_b.size()) + 1e-12 < min_b) return false;
  return violates(e_sub, static_cast<std::int64_t>(report.witness_a.size()),
                  static_cast<std::int64_t>(report.witness_b.size()), e_all,
                  static_cast<std::int64_t>(report.set_a.size()),
                  static_cast<std::int64_t>(report.set_b.size()),
                  report.epsilon * report.p_scale);
}

UpperUniformityReport upper_uniformity_check(const Graph& g, double gamma, double p_scale,
                                             RegularityMode mode, const SplitRng& rng,
                                             int probes) {
  require(gamma > 0.0 && gamma < 1.0, ErrorCode::invalid_argument, "gamma outside (0,1)");
  UpperUniformityReport report;
  report.mode = mode;
  const Vertex n = g.vertex_count();
  const int min_size = std::max(1, static_cast<int>(std::ceil(gamma * n - 1e-12)));
  const double bound_factor = (1.0 + gamma) * p_scale;

  auto check_pair = [&](const std::vector<Vertex>& u, std::vector<Vertex> rest) {
    // Extremal W of each size: the top-degree-into-U vertices.
    std::vector<std::pair<int, Vertex>> deg;
    std::vector<char> in_u(n, 0);
    for (Vertex v : u) in_u[v] = 1;
    for (Vertex w : rest) {
      int d = 0;
      for (Vertex x : g.neighbors(w)) d += in_u[x];
      deg.push_back({d, w});
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < deg.size(); ++k) {
      sum += deg[k].first;
      int w_size = static_cast<int>(k) + 1;
      if (w_size < min_size) continue;
      double bound = bound_factor * static_cast<double>(u.size()) * w_size;
      if (static_cast<double>(sum) > bound) {
        report.violation_found = true;
        report.set_u = u;
        report.set_w.clear();
        for (int i = 0; i <= static_cast<int>(k); ++i) report.set_w.push_back(deg[i].second);
        report.observed_density_ratio =
            static_cast<double>(sum) /
            (p_scale * static_cast<double>(u.size()) * static_cast<double>(w_size));
        return true;
      }
    }
    return false;
  };

  if (mode == RegularityMode::exact) {
    require(n <= 20, ErrorCode::search_capped,
            "exact upper-uniformity capped at 20 vertices");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < min_size) continue;
      std::vector<Vertex> u, rest;
      for (Vertex v = 0; v < n; ++v)
        (mask & (1u << v)) ? u.push_back(v) : rest.push_back(v);
      if (static_cast<int>(rest.size()) < min_size) continue;
      if (check_pair(u, std::move(rest))) return report;
    }
    return report;
  }

  SplitRng stream = rng.fork(SplitRng::kWitnessSearch, 1);
  report.probes = probes;
  for (int probe = 0; probe < probes; ++probe) {
    int size = min_size + static_cast<int>(stream.next_below(
                              std::max<std::uint64_t>(1, n - 2 * min_size + 1)));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < size; ++i)
      std::swap(perm[i], perm[i + stream.next_below(n - i)]);
    std::vector<Vertex> u(perm.begin(), perm.begin() + size);
    std::vector<Vertex> rest(perm.begin() + size, perm.end());
    if (check_pair(u, std::move(rest))) {
      report.probes = probe + 1;
      return report;
    }
  }
  return report;
}

CleanupResult cleanup_partition(const Graph& g, std::vector<std::vector<Vertex>> sets,
                                double d_min) {
  CleanupResult result;
  std::vector<std::size_t> original_sizes;
  for (const auto& s : sets) {
    require(!s.empty(), ErrorCode::empty_part, "cleanup on an empty set");
    original_sizes.push_back(s.size());
  }
  std::vector<int> set_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i]) set_of[v] = static_cast<int>(i);

  bool changed = true;
  while (changed) {
    changed = false;
    ++result.rounds;
    // deg[v][j]: degree of v into current set j.
    std::vector<std::vector<int>> deg(g.vertex_count(), std::vector<int>(sets.size(), 0));
    for (std::size_t j = 0; j < sets.size(); ++j)
      for (Vertex v : sets[j])
        for (Vertex w : g.neighbors(v))
          if (set_of[w] >= 0) ++deg[w][j];  // note: counts degree of w into set j
    std::vector<Vertex> doomed;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (Vertex v : sets[i]) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
          if (j == i) continue;
          if (static_cast<double>(deg[v][j]) <
              d_min * static_cast<double>(sets[j].size()) - 1e-12) {
            doomed.push_back(v);
            break;
          }
        }
      }
    }
    if (!doomed.empty()) {
      changed = true;
      for (Vertex v : doomed) {
        auto& set = sets[set_of[v]];
        set.erase(std::find(set.begin(), set.end(), v));
        set_of[v] = -1;
      }
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].empty())
          fail(ErrorCode::cleanup_collapsed,
               "cleanup-collapsed: set " + std::to_string(i) + " emptied");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    result.retention.push_back(static_cast<double>(sets[i].size()) /
                               static_cast<double>(original_sizes[i]));
  result.sets = std::move(sets);
  return result;
}

namespace {

std::vector<std::vector<Vertex>> equalize(std::vector<std::vector<Vertex>> parts,
                                          std::size_t total) {
  // Move trailing vertices from oversized parts to the smallest parts until
  // sizes differ by at most one. Deterministic.
  std::size_t t = parts.size();
  std::size_t low = total / t;
  std::size_t high = (total + t - 1) / t;
  for (;;) {
    auto big = std::max_element(parts.begin(), parts.end(),
                                [](const auto& x, const auto& y) { return x.size() < y.size(); });
    auto small = std::min_element(parts.begin(), parts.end(),
                                  [](const auto& x, const auto& y) { return x.size() < y.size(); });
    if (big->size() <= high && small->size() >= low) break;
    if (big->size() <= small->size() + 1) break;
    small->push_back(big->back());
    big->pop_back();
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

}  // namespace

PartitionResult regularity_partition(const Graph& g, double eps, double p_scale, int t0,
                                     int t_max, const SplitRng& rng,
                                     std::optional<std::vector<std::vector<Vertex>>> initial_parts,
                                     int max_rounds, int randomized_trials) {
  require(t0 >= 1 && t0 <= t_max, ErrorCode::invalid_argument, "need 1 <= t0 <= t_max");
  PartitionResult result;
  std::size_t total = 0;
  if (initial_parts.has_value()) {
    result.parts = *initial_parts;
    for (const auto& p : result.parts) total += p.size();
  } else {
    require(t0 <= g.vertex_count(), ErrorCode::invalid_argument, "t0 exceeds vertex count");
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    SplitRng stream = rng.fork(SplitRng::kPartition);
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      std::swap(perm[i], perm[i + stream.next_below(perm.size() - i)]);
    result.parts.assign(t0, {});
    for (std::size_t i = 0; i < perm.size(); ++i)
      result.parts[i % t0].push_back(perm[i]);
    for (auto& p : result.parts) std::sort(p.begin(), p.end());
    total = perm.size();
  }

  for (int round = 0; round < max_rounds; ++round) {
    ++result.rounds;
    result.pair_reports.clear();
    result.irregular_pairs.clear();
    int worst = -1;
    double worst_gap = 0.0;
    for (std::size_t i = 0; i < result.parts.size(); ++i) {
      for (std::size_t j = i + 1; j < result.parts.size(); ++j) {
        RegularityMode mode = (result.parts[i].size() <= kExactSideCap &&
                               result.parts[j].size() <= kExactSideCap)
                                  ? RegularityMode::exact
                                  : RegularityMode::randomized;
        auto report = regularity_check(g, result.parts[i], result.parts[j], eps, p_scale,
                                       mode, rng.fork(SplitRng::kWitnessSearch, round * 10007 + i * 101 + j),
                                       randomized_trials);
        if (report.verdict == RegularPairReport::Verdict::irregular_with_witness) {
          result.irregular_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
          ++result.witnesses_found;
          double gap = std::fabs(report.witness_density - report.density);
          if (gap > worst_gap) {
            worst_gap = gap;
            worst = static_cast<int>(result.pair_reports.size());
          }
        }
        result.pair_reports.push_back(std::move(report));
      }
    }
    if (result.irregular_pairs.empty()) break;
    if (static_cast<int>(result.parts.size()) + 2 > t_max) break;

    // Split both sides of the worst witness pair and rebalance.
    const auto& bad = result.pair_reports[worst];
    auto split = [&](const std::vector<Vertex>& part, const std::vector<Vertex>& inside) {
      std::vector<Vertex> first, second;
      std::vector<char> mark(g.vertex_count(), 0);
      for (Vertex v : inside) mark[v] = 1;
      for (Vertex v : part) (mark[v] ? first : second).push_back(v);
      return std::make_pair(first, second);
    };
    std::vector<std::vector<Vertex>> next;
    for (const auto& part : result.parts) {
      if (part == bad.set_a) {
        auto [w, rest] = split(part, bad.witness_a);
        if (!w.empty()) next.push_back(w);
        if (!rest.empty()) next.push_back(rest);
      } else if (part == bad.set_b) {
        auto [w, rest] = split(part, bad.witness_b);
        if (!w.empty()) next.push_back(w);
        if (!rest.empty()) next.push_back(rest);
      } else {
        next.push_back(part);
      }
    }
    result.parts = equalize(std::move(next), total);
  }
  return result;
}

NicelyDistributedReport nicely_distributed_blocks(
    const std::vector<std::vector<Vertex>>& parts,
    const std::vector<std::pair<int, std::vector<Vertex>>>& blocks_with_b0, double beta,
    int c_block_size, int t_total, double xi) {
  require(t_total >= 1, ErrorCode::invalid_argument, "t_total must be positive");
  NicelyDistributedReport report;
  report.bar = xi * static_cast<double>(c_block_size) / static_cast<double>(t_total);
  double needed_parts = (1.0 - beta) * static_cast<double>(t_total);
  Vertex max_v = 0;
  for (const auto& part : parts)
    for (Vertex v : part) max_v = std::max(max_v, v);
  std::vector<int> part_of(max_v + 1, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) part_of[v] = static_cast<int>(i);

  for (const auto& [block_index, b0] : blocks_with_b0) {
    std::vector<int> hits(parts.size(), 0);
    for (Vertex v : b0)
      if (v <= max_v && part_of[v] >= 0) ++hits[part_of[v]];
    int meeting = 0;
    for (int h : hits)
      if (static_cast<double>(h) >= report.bar) ++meeting;
    NicelyDistributedBlock entry;
    entry.block_index = block_index;
    entry.parts_meeting_bar = meeting;
    entry.qualifies = static_cast<double>(meeting) >= needed_parts - 1e-12;
    if (entry.qualifies) report.qualifying.push_back(block_index);
    report.blocks.push_back(entry);
  }
  if (!report.blocks.empty())
    report.achieved_fraction = static_cast<double>(report.qualifying.size()) /
                               static_cast<double>(report.blocks.size());
  return report;
}

TransferCheck subsample_regularity_transfer_check(
    const Graph& before, const Graph& after, const std::vector<Vertex>& a,
    const std::vector<Vertex>& b, double eps, double scale_before, double scale_after,
    RegularityMode mode, const SplitRng& rng) {
  TransferCheck check;
  check.before = regularity_check(before, a, b, eps, scale_before, mode, rng);
  check.after = regularity_check(after, a, b, std::min(1.0, 4.0 * eps), scale_after, mode,
                                 rng.fork(SplitRng::kWitnessSearch, 2));
  check.before_density_ratio = check.before.density / scale_before;
  check.after_density_ratio = check.after.density / scale_after;
  check.after_regular_at_4eps =
      check.after.verdict == RegularPairReport::Verdict::regular;
  check.half_density_met = check.after_density_ratio >= check.before_density_ratio / 2.0;
  return check;
}

}  // namespace ramsey
