#include "ramsey/redsets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ramsey/error.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

namespace {

std::int64_t colour_edges_between(const TwoColoring& colouring, const Graph& host,
                                  const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                                  Colour c) {
  std::vector<char> in_b(host.vertex_count(), 0);
  for (Vertex v : b) in_b[v] = 1;
  std::int64_t count = 0;
  for (Vertex u : a)
    for (Vertex w : host.neighbors(u))
      if (in_b[w] && colouring.colour(u, w) == c) ++count;
  return count;
}

// Finds a K-clique in the meta graph given by the pair predicate.
bool meta_clique(int t, int k, const std::vector<std::vector<char>>& good,
                 std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == k) return true;
  int start = chosen.empty() ? 0 : chosen.back() + 1;
  for (int cand = start; cand < t; ++cand) {
    bool ok = true;
    for (int c : chosen)
      if (!good[c][cand]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(cand);
    if (meta_clique(t, k, good, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

RegularRedSetsResult fail_stage(std::string stage, std::string detail) {
  RegularRedSetsResult result;
  result.failed_stage = std::move(stage);
  result.detail = std::move(detail);
  return result;
}

// Shared endgame: given a partition of R and a per-pair dense-edge count,
// colour pairs by threshold, require regularity, and extract the K-clique.
void finish_from_parts(RegularRedSetsResult& result,
                       const std::vector<std::vector<Vertex>>& parts,
                       const std::vector<RegularPairReport>& reports, const Graph& host,
                       const TwoColoring& colouring, Colour target, double p_scale,
                       const RedSetsOptions& options) {
  int t = static_cast<int>(parts.size());
  std::vector<std::vector<std::int64_t>> dense_count(t, std::vector<std::int64_t>(t, 0));
  std::int64_t max_count = 0;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      auto count = colour_edges_between(colouring, host, parts[i], parts[j], target);
      dense_count[i][j] = dense_count[j][i] = count;
      max_count = std::max(max_count, count);
    }
  double threshold = options.absolute_threshold >= 0.0
                         ? options.absolute_threshold
                         : options.relative_threshold * static_cast<double>(max_count);

  auto report_at = [&](int i, int j) -> const RegularPairReport& {
    // reports are row-major over i < j.
    int idx = 0;
    for (int x = 0; x < t; ++x)
      for (int y = x + 1; y < t; ++y) {
        if (x == std::min(i, j) && y == std::max(i, j)) return reports[idx];
        ++idx;
      }
    fail(ErrorCode::internal, "pair report lookup out of range");
  };

  std::vector<std::vector<char>> good(t, std::vector<char>(t, 0));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      bool dense = static_cast<double>(dense_count[i][j]) >= threshold;
      bool regular = report_at(i, j).verdict == RegularPairReport::Verdict::regular;
      if (dense && regular) {
        good[i][j] = good[j][i] = 1;
        result.meta_red_pairs.emplace_back(i, j);
      }
    }

  std::vector<int> chosen;
  if (!meta_clique(t, options.set_count, good, chosen)) {
    result.failed_stage = "meta-clique";
    result.detail = "no clique of " + std::to_string(options.set_count) +
                    " pairwise dense regular parts (threshold " + std::to_string(threshold) +
                    ")";
    return;
  }
  result.success = true;
  for (int c : chosen) result.sets.push_back(parts[c]);
  for (std::size_t i = 0; i < result.sets.size(); ++i)
    for (std::size_t j = i + 1; j < result.sets.size(); ++j) {
      const auto& rep = report_at(chosen[i], chosen[j]);
      result.pair_reports.push_back(rep);
      double dens = static_cast<double>(dense_count[chosen[i]][chosen[j]]) /
                    (static_cast<double>(parts[chosen[i]].size()) *
                     static_cast<double>(parts[chosen[j]].size()));
      result.pair_densities.push_back(dens);
    }
  (void)p_scale;
}

}  // namespace

RegularRedSetsResult find_regular_red_sets_from_cliques(
    const Graph& g, const TwoColoring& colouring, const std::vector<Vertex>& r_set,
    const std::vector<CliqueCertificate>& certificates, int c_prime, int c_block_size,
    double p_scale, const RedSetsOptions& options, const SplitRng& rng,
    const SearchLimits& limits) {
  Colour target = options.colour;
  Colour avoid = opposite(target);

  // Stage 1: certificate validation. Each certificate claims no avoid-colour
  // K_{C'} inside base - excess.
  std::vector<char> in_r(g.vertex_count(), 0);
  for (Vertex v : r_set) in_r[v] = 1;
  RegularRedSetsResult result;
  std::vector<const CliqueCertificate*> valid_certs;
  for (const auto& cert : certificates) {
    bool inside_r = true;
    for (Vertex v : cert.base) inside_r = inside_r && in_r[v];
    if (!inside_r) continue;
    std::vector<Vertex> survivors;
    for (Vertex v : cert.base)
      if (std::find(cert.excess.begin(), cert.excess.end(), v) == cert.excess.end())
        survivors.push_back(v);
    if (static_cast<int>(survivors.size()) < c_prime) {
      valid_certs.push_back(&cert);  // vacuously clique-free
      continue;
    }
    bool all_host_edges = true;
    for (std::size_t i = 0; i < survivors.size() && all_host_edges; ++i)
      for (std::size_t j = i + 1; j < survivors.size(); ++j)
        if (!g.has_edge(survivors[i], survivors[j])) {
          all_host_edges = false;
          break;
        }
    if (!all_host_edges) continue;
    auto bad = find_monochromatic_clique(colouring, survivors, avoid, c_prime, limits);
    if (!bad.has_value()) valid_certs.push_back(&cert);
  }
  result.certificates_validated = static_cast<int>(valid_certs.size());
  if (valid_certs.empty())
    return fail_stage("certificate-validation", "no certificate survived validation");

  // Stage 2: regularity partition of the target-colour subgraph of g[R].
  Graph target_subgraph = colouring.colour_subgraph(target);
  auto partition = regularity_partition(target_subgraph, options.eps, p_scale,
                                        std::max(options.t0, options.set_count + 1),
                                        options.t_max, rng,
                                        std::nullopt, options.max_rounds,
                                        options.randomized_trials);
  // Restrict parts to R.
  std::vector<std::vector<Vertex>> parts;
  for (auto& part : partition.parts) {
    std::vector<Vertex> restricted;
    for (Vertex v : part)
      if (in_r[v]) restricted.push_back(v);
    if (!restricted.empty()) parts.push_back(std::move(restricted));
  }
  if (static_cast<int>(parts.size()) < options.set_count)
    return fail_stage("partition", "fewer parts than requested sets");

  // Stage 3: nicely distributed certified blocks (B0 = base - excess).
  std::vector<std::pair<int, std::vector<Vertex>>> blocks_b0;
  for (const auto* cert : valid_certs) {
    std::vector<Vertex> b0;
    for (Vertex v : cert->base)
      if (std::find(cert->excess.begin(), cert->excess.end(), v) == cert->excess.end())
        b0.push_back(v);
    blocks_b0.emplace_back(cert->block_index, std::move(b0));
  }
  auto nicely = nicely_distributed_blocks(parts, blocks_b0, options.beta, c_block_size,
                                          static_cast<int>(parts.size()), options.xi);
  result.qualifying_blocks = static_cast<int>(nicely.qualifying.size());
  if (nicely.qualifying.empty())
    return fail_stage("nicely-distributed", "no certified block met the distribution bar");

  // Stages 4-5: meta colouring by dense-edge count and the K-clique search.
  auto pair_reports = std::move(partition.pair_reports);
  // Recompute pair reports on the R-restricted parts for the final verdicts.
  std::vector<RegularPairReport> restricted_reports;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      RegularityMode mode = (parts[i].size() <= 16 && parts[j].size() <= 16)
                                ? RegularityMode::exact
                                : RegularityMode::randomized;
      restricted_reports.push_back(regularity_check(
          target_subgraph, parts[i], parts[j], options.eps, p_scale, mode,
          rng.fork(SplitRng::kWitnessSearch, 7001 + i * 131 + j), options.randomized_trials));
    }
  finish_from_parts(result, parts, restricted_reports, g, colouring, target, p_scale,
                    options);
  (void)pair_reports;
  return result;
}

RegularRedSetsResult find_regular_red_sets_from_densifiers(
    const LayerSet& layers, const TwoColoring& colouring, const std::vector<Vertex>& r_set,
    const std::vector<std::optional<Densifier>>& densifiers, double p_scale, double tau,
    const RedSetsOptions& options, const SplitRng& rng) {
  Colour target = options.colour;
  int with_densifier = 0;
  for (const auto& d : densifiers)
    if (d.has_value()) ++with_densifier;
  if (2 * with_densifier < static_cast<int>(densifiers.size()))
    return fail_stage("precondition",
                      "fewer than half the layers carry a validated densifier");

  // Union of the A_i layers, then its target-colour subgraph restricted to
  // pairs coloured in the host colouring.
  std::vector<Edge> union_edges;
  for (const Graph& a : layers.layers)
    for (const auto& e : a.edges()) union_edges.push_back(e);
  std::sort(union_edges.begin(), union_edges.end());
  union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
  Vertex n = layers.layers.empty() ? 0 : layers.layers.front().vertex_count();
  Graph layer_union(n, std::move(union_edges));

  std::vector<Edge> target_edges;
  for (const auto& [u, v] : layer_union.edges())
    if (colouring.has_edge_of(u, v, target)) target_edges.push_back({u, v});
  Graph target_union(n, std::move(target_edges));

  std::vector<char> in_r(n, 0);
  for (Vertex v : r_set) in_r[v] = 1;

  auto partition = regularity_partition(target_union, options.eps, p_scale,
                                        std::max(options.t0, options.set_count + 1),
                                        options.t_max, rng, std::nullopt,
                                        options.max_rounds, options.randomized_trials);
  std::vector<std::vector<Vertex>> parts;
  for (auto& part : partition.parts) {
    std::vector<Vertex> restricted;
    for (Vertex v : part)
      if (in_r[v]) restricted.push_back(v);
    if (!restricted.empty()) parts.push_back(std::move(restricted));
  }
  int t = static_cast<int>(parts.size());
  if (t < options.set_count) {
    return fail_stage("partition", "fewer parts than requested sets");
  }

  // Niceness scoring. For a candidate tuple and layer: every tuple set must
  // meet a distinct family of the layer's densifier in >= beta * m vertices
  // (checked by greedy distinct-family assignment).
  double m_avg = 0.0;
  for (const auto& part : parts) m_avg += static_cast<double>(part.size());
  m_avg /= std::max(1, t);
  double beta_floor = options.beta * m_avg;

  auto family_hit = [&](const Densifier& d, const std::vector<Vertex>& part) {
    std::vector<int> hits;
    std::vector<char> in_part(n, 0);
    for (Vertex v : part) in_part[v] = 1;
    for (std::size_t f = 0; f < d.families.size(); ++f) {
      int count = 0;
      for (const auto& p : d.families[f])
        for (Vertex v : p.vertices) count += in_part[v];
      if (static_cast<double>(count) >= beta_floor) hits.push_back(static_cast<int>(f));
    }
    return hits;
  };

  // Greedy tuple search: score all K-subsets of parts when feasible, else a
  // greedy beam. t stays small at desk scale, so enumerate combinations.
  std::vector<int> best_tuple;
  int best_score = -1;
  std::vector<int> tuple;
  std::vector<RegularPairReport> all_reports;
  auto report_for = [&](int i, int j) {
    RegularityMode mode = (parts[i].size() <= 16 && parts[j].size() <= 16)
                              ? RegularityMode::exact
                              : RegularityMode::randomized;
    return regularity_check(target_union, parts[i], parts[j], options.eps, p_scale, mode,
                            rng.fork(SplitRng::kWitnessSearch, 9901 + i * 131 + j),
                            options.randomized_trials);
  };
  std::vector<std::vector<char>> pair_regular(t, std::vector<char>(t, 0));
  std::vector<std::vector<RegularPairReport>> pair_report(t,
                                                          std::vector<RegularPairReport>(t));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      pair_report[i][j] = report_for(i, j);
      pair_regular[i][j] = pair_regular[j][i] =
          pair_report[i][j].verdict == RegularPairReport::Verdict::regular;
    }

  std::function<void(int, int)> enumerate = [&](int start, int depth) {
    if (depth == options.set_count) {
      // Regularity filter first.
      for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
          if (!pair_regular[tuple[i]][tuple[j]]) return;
      int score = 0;
      for (const auto& dens : densifiers) {
        if (!dens.has_value()) continue;
        // Distinct-family matching, greedy: families hit per tuple set.
        std::vector<char> family_used(dens->families.size(), 0);
        bool nice = true;
        for (int part_idx : tuple) {
          auto hits = family_hit(*dens, parts[part_idx]);
          bool assigned = false;
          for (int f : hits)
            if (!family_used[f]) {
              family_used[f] = 1;
              assigned = true;
              break;
            }
          if (!assigned) {
            nice = false;
            break;
          }
        }
        if (nice) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best_tuple = tuple;
      }
      return;
    }
    for (int cand = start; cand < t; ++cand) {
      tuple.push_back(cand);
      enumerate(cand + 1, depth + 1);
      tuple.pop_back();
    }
  };
  enumerate(0, 0);

  RegularRedSetsResult result;
  result.density_target = tau * p_scale;
  if (best_tuple.empty() || best_score < 0)
    return fail_stage("nice-pairs", "no pairwise-regular tuple found");
  result.success = true;
  result.qualifying_blocks = best_score;  // layers scored nice for the winner
  for (int idx : best_tuple) result.sets.push_back(parts[idx]);
  for (std::size_t i = 0; i < best_tuple.size(); ++i)
    for (std::size_t j = i + 1; j < best_tuple.size(); ++j) {
      auto rep = pair_report[best_tuple[i]][best_tuple[j]];
      double dens = colour_edges_between(colouring, layer_union, parts[best_tuple[i]],
                                         parts[best_tuple[j]], target) /
                    (static_cast<double>(parts[best_tuple[i]].size()) *
                     static_cast<double>(parts[best_tuple[j]].size()));
      result.pair_densities.push_back(dens);
      result.pair_reports.push_back(std::move(rep));
    }
  return result;
}

}  // namespace ramsey
