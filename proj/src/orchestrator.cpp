#include "ramsey/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ramsey/error.hpp"
#include "ramsey/pattern_embed.hpp"
#include "ramsey/redsets.hpp"
#include "ramsey/regularity.hpp"
#include "ramsey/tree_embed.hpp"

namespace ramsey {

namespace {

Graph induced(const Graph& g, const std::vector<Vertex>& keep, std::vector<Vertex>& ids) {
  ids = keep;
  std::vector<Vertex> relabel(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.push_back({relabel[u], relabel[v]});
  return Graph(static_cast<Vertex>(keep.size()), std::move(edges));
}

struct ContainerPlan {
  bool has_tree = false;
  RootedTree tree;               // container tree T
  int k = 1;                     // class size
  Graph blowup_pattern;          // T boxtimes K_k
  std::vector<Vertex> j_ids;     // J vertices in pattern numbering
  std::vector<Vertex> j_to_blowup;  // J-subgraph vertex -> blow-up vertex
};

ContainerPlan plan_container(const Graph& pattern, const Decomposition& decomp) {
  ContainerPlan plan;
  if (decomp.j_set.empty()) return plan;
  plan.has_tree = true;
  std::vector<Vertex> ids;
  Graph j_graph = induced(pattern, decomp.j_set, ids);
  plan.j_ids = ids;
  auto td = tree_decomposition_small(j_graph, /*width_cap=*/64);
  auto container = build_tree_blowup_container(j_graph, td.decomposition,
                                               std::max<Vertex>(3, j_graph.max_degree()));
  plan.tree = container.tree;
  plan.k = container.class_size;
  auto blowup = blow_up(plan.tree.as_graph(), plan.k, BlowUpKind::clique);
  plan.blowup_pattern = std::move(blowup.graph);
  plan.j_to_blowup.resize(j_graph.vertex_count());
  for (Vertex v = 0; v < j_graph.vertex_count(); ++v)
    plan.j_to_blowup[v] = container.slot_node[v] * plan.k + container.slot_index[v];
  return plan;
}

// Extraction used by both cases: partition the colour subgraph, then find
// set_count parts that are pairwise regular and dense in that colour.
struct ExtractedSets {
  bool success = false;
  std::vector<std::vector<Vertex>> sets;
  double min_density = 0.0;
  std::string note;
};

ExtractedSets extract_regular_sets(const Graph& colour_subgraph, double p_scale,
                                   int set_count, const std::vector<Vertex>& restrict_to,
                                   const RamseyEmbedOptions& options, const SplitRng& rng) {
  ExtractedSets out;
  int t0 = set_count + options.t_extra;
  if (t0 > colour_subgraph.vertex_count()) {
    out.note = "vertex count below the requested part count";
    return out;
  }
  auto partition = regularity_partition(colour_subgraph, options.eps, p_scale, t0,
                                        t0 + options.t_extra, rng, std::nullopt,
                                        options.partition_rounds,
                                        options.randomized_trials);
  std::vector<std::vector<Vertex>> parts;
  if (restrict_to.empty()) {
    parts = partition.parts;
  } else {
    std::vector<char> allowed(colour_subgraph.vertex_count(), 0);
    for (Vertex v : restrict_to) allowed[v] = 1;
    for (const auto& part : partition.parts) {
      std::vector<Vertex> kept;
      for (Vertex v : part)
        if (allowed[v]) kept.push_back(v);
      if (!kept.empty()) parts.push_back(std::move(kept));
    }
  }
  int t = static_cast<int>(parts.size());
  if (t < set_count) {
    out.note = "partition produced too few parts";
    return out;
  }

  // Pair densities and regular verdicts.
  std::vector<std::vector<double>> density(t, std::vector<double>(t, 0.0));
  std::vector<std::vector<char>> regular(t, std::vector<char>(t, 0));
  double max_density = 0.0;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      density[i][j] = density[j][i] =
          pair_density(colour_subgraph, parts[i], parts[j]).value();
      max_density = std::max(max_density, density[i][j]);
      RegularityMode mode = (parts[i].size() <= 16 && parts[j].size() <= 16)
                                ? RegularityMode::exact
                                : RegularityMode::randomized;
      auto report = regularity_check(colour_subgraph, parts[i], parts[j], options.eps,
                                     p_scale, mode,
                                     rng.fork(SplitRng::kWitnessSearch, 501 + i * 173 + j),
                                     options.randomized_trials);
      regular[i][j] = regular[j][i] =
          report.verdict == RegularPairReport::Verdict::regular;
    }
  double threshold = options.relative_threshold * max_density;

  std::vector<std::vector<char>> good(t, std::vector<char>(t, 0));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      good[i][j] = good[j][i] = regular[i][j] && density[i][j] >= threshold;

  std::vector<int> chosen;
  std::function<bool(int)> clique = [&](int start) -> bool {
    if (static_cast<int>(chosen.size()) == set_count) return true;
    for (int cand = start; cand < t; ++cand) {
      bool ok = true;
      for (int c : chosen)
        if (!good[c][cand]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(cand);
      if (clique(cand + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!clique(0)) {
    out.note = "no clique of pairwise dense regular parts";
    return out;
  }
  out.success = true;
  out.min_density = 1.0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    out.sets.push_back(parts[chosen[i]]);
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      out.min_density = std::min(out.min_density, density[chosen[i]][chosen[j]]);
  }
  return out;
}

}  // namespace

RamseyEmbedResult ramsey_embed(const LayeredHost& host, const TwoColoring& colouring,
                               const Graph& pattern, const RamseyEmbedOptions& options,
                               const SplitRng& rng) {
  RamseyEmbedResult result;
  auto log = [&](std::string stage, std::string outcome) {
    result.stages.push_back({std::move(stage), std::move(outcome)});
  };

  if (pattern.max_degree() > 3)
    fail(ErrorCode::degree_exceeded, "degree-exceeded: pattern has max degree " +
                                         std::to_string(pattern.max_degree()));
  if (pattern.vertex_count() > host.gamma.vertex_count())
    fail(ErrorCode::pattern_too_large, "pattern-too-large");
  if (pattern.vertex_count() == 0) {
    result.success = true;
    result.map.pattern = share(pattern);
    result.case_taken = "trivial";
    return result;
  }

  // Decomposition and the remainder container.
  auto decomp = decompose_cubic(pattern, host.params.ell);
  log("decompose", std::to_string(decomp.cycles.size()) + " cycles, |J| = " +
                       std::to_string(decomp.j_set.size()));
  ContainerPlan container = plan_container(pattern, decomp);
  if (container.has_tree)
    log("container", "tree on " + std::to_string(container.tree.vertex_count()) +
                         " nodes, class size " + std::to_string(container.k));

  auto assignment = make_candidate_assignment(pattern, decomp);
  int nc = std::max(1, assignment.class_count);
  int set_count = 2 * nc + 1;
  log("classes", std::to_string(nc) + " distance-2 classes, " +
                     std::to_string(set_count) + " sets requested");

  // ---- Deficiency probes -------------------------------------------------
  // A colour is judged deficient when neither the layer pipeline nor a direct
  // budgeted search finds the container blow-up in that colour on a sampled
  // vertex set. With an empty container nothing can be deficient.
  const Vertex n = host.gamma.vertex_count();
  std::vector<Vertex> probe_set;
  {
    SplitRng stream = rng.fork(SplitRng::kProbe, 0);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Vertex want = static_cast<Vertex>(options.case2_fraction * n);
    for (Vertex i = 0; i < want; ++i)
      std::swap(perm[i], perm[i + stream.next_below(n - i)]);
    probe_set.assign(perm.begin(), perm.begin() + want);
    std::sort(probe_set.begin(), probe_set.end());
  }

  auto colour_has_container = [&](Colour c) -> bool {
    if (!container.has_tree) return true;
    BlowupEmbedParams bp;
    bp.t = options.blowup_t;
    bp.s = options.blowup_s;
    bp.k = container.k;
    bp.node_budget = options.node_budget / 4;
    bp.limits = options.limits;
    int layers_to_probe =
        std::min<int>(options.probe_layers, static_cast<int>(host.layers.matchings.size()));
    for (int li = 0; li < layers_to_probe; ++li) {
      auto attempt = monochromatic_tree_blowup(host.layers, li, colouring, container.tree,
                                               probe_set, bp, c);
      if (attempt.success) return true;
    }
    PatternEmbedOptions pe;
    pe.node_budget = options.node_budget / 4;
    pe.allowed_hosts = &probe_set;
    auto direct = embed_pattern(host.gamma, container.blowup_pattern, colouring, c, pe);
    return direct.success;
  };

  std::optional<Colour> deficient;
  if (container.has_tree) {
    for (Colour c : {Colour::blue, Colour::red}) {
      if (!colour_has_container(c)) {
        deficient = c;
        break;
      }
    }
  }
  log("probe", deficient.has_value()
                   ? std::string(colour_name(*deficient)) + " lacks the container blow-up"
                   : "both colours carry the container (or no container needed)");

  // ---- Endgame shared by both cases --------------------------------------
  // Given the extracted sets and the cycle host, embed the container into
  // the last set and the cycles into the half families.
  auto endgame = [&](Colour target, const std::vector<std::vector<Vertex>>& sets,
                     const Graph& cycle_host, double min_density,
                     const std::string& case_name) -> bool {
    std::vector<Vertex> full_image(pattern.vertex_count(), -1);

    if (container.has_tree) {
      const auto& tree_set = sets.back();
      EmbeddingMap t_map;
      bool t_done = false;
      BlowupEmbedParams bp;
      bp.t = options.blowup_t;
      bp.s = options.blowup_s;
      bp.k = container.k;
      bp.node_budget = options.node_budget / 2;
      bp.limits = options.limits;
      for (std::size_t li = 0; li < host.layers.matchings.size() && !t_done; ++li) {
        auto attempt = monochromatic_tree_blowup(host.layers, static_cast<int>(li),
                                                 colouring, container.tree, tree_set, bp,
                                                 target);
        if (attempt.success) {
          t_map = std::move(attempt.map);
          t_done = true;
          log(case_name + ":container", "layer pipeline placed the container (layer " +
                                            std::to_string(li) + ")");
        }
      }
      if (!t_done) {
        PatternEmbedOptions pe;
        pe.node_budget = options.node_budget;
        pe.allowed_hosts = &tree_set;
        auto direct =
            embed_pattern(host.gamma, container.blowup_pattern, colouring, target, pe);
        if (direct.success) {
          t_map = std::move(direct.map);
          t_done = true;
          log(case_name + ":container", "direct search placed the container");
        }
      }
      if (!t_done) {
        log(case_name + ":container", "container embedding failed");
        return false;
      }
      for (std::size_t jv = 0; jv < container.j_ids.size(); ++jv)
        full_image[container.j_ids[jv]] = t_map.image[container.j_to_blowup[jv]];
    }

    // Half families from the first 2 nc sets.
    std::vector<std::vector<Vertex>> halves(sets.begin(), sets.begin() + 2 * nc);
    double navg = 0.0;
    for (const auto& s : halves) navg += static_cast<double>(s.size());
    navg /= std::max<std::size_t>(1, halves.size());
    int min_cand = std::max(
        options.min_candidates,
        static_cast<int>(std::floor(navg * std::max(min_density, 0.0) / 20.0)));
    auto cycles = embed_cycles_pipeline(cycle_host, halves, nc, pattern, decomp,
                                        assignment, full_image, min_cand,
                                        options.node_budget);
    if (!cycles.success) {
      log(case_name + ":cycles", "failed at stage " + cycles.failed_stage + " (cycle " +
                                     std::to_string(cycles.failed_cycle) + ")");
      return false;
    }
    full_image = std::move(cycles.image);

    EmbeddingMap final_map;
    final_map.pattern = share(pattern);
    final_map.image = std::move(full_image);
    auto violations = validate_embedding(final_map, host.gamma, colouring, target);
    if (!violations.empty()) {
      log(case_name + ":validate", std::to_string(violations.size()) + " violations");
      return false;
    }
    result.success = true;
    result.colour = target;
    result.map = std::move(final_map);
    result.case_taken = case_name;
    log(case_name + ":validate", "embedding validated");
    return true;
  };

  // ---- Case II: one colour lacks the container ---------------------------
  if (deficient.has_value()) {
    Colour avoid = *deficient;
    Colour target = opposite(avoid);
    auto dichotomy = qpartition_or_cliques(host.layers, colouring, probe_set,
                                           container.tree, avoid, [&] {
                                             QPartitionParams qp;
                                             qp.c_prime = host.params.C_prime;
                                             qp.rho = host.params.rho;
                                             qp.s = options.blowup_s;
                                             qp.q = std::max(3, host.params.q);
                                             qp.node_budget = options.node_budget / 4;
                                             qp.limits = options.limits;
                                             return qp;
                                           }());
    int densifier_count = 0, certificate_count = 0;
    for (const auto& layer : dichotomy) {
      if (layer.kind == LayerDichotomy::Kind::densifier) ++densifier_count;
      if (layer.kind == LayerDichotomy::Kind::certificates) ++certificate_count;
    }
    log("case-ii:dichotomy", std::to_string(densifier_count) + " densifier layers, " +
                                 std::to_string(certificate_count) +
                                 " certificate layers");

    RedSetsOptions rs;
    rs.set_count = set_count;
    rs.eps = options.eps;
    rs.t0 = set_count + options.t_extra;
    rs.t_max = rs.t0 + options.t_extra;
    rs.relative_threshold = options.relative_threshold;
    rs.randomized_trials = options.randomized_trials;
    rs.max_rounds = options.partition_rounds;
    rs.colour = target;

    bool densifier_branch = densifier_count >= certificate_count && densifier_count > 0;
    if (densifier_branch) {
      std::vector<std::optional<Densifier>> densifiers;
      for (const auto& layer : dichotomy)
        densifiers.push_back(layer.kind == LayerDichotomy::Kind::densifier
                                 ? layer.densifier
                                 : std::nullopt);
      auto extraction = find_regular_red_sets_from_densifiers(
          host.layers, colouring, probe_set, densifiers, host.params.p_dprime,
          host.params.tau, rs, rng);
      if (extraction.success) {
        log("case-ii:sets", "densifier route extracted " +
                                std::to_string(extraction.sets.size()) + " sets");
        // Cycle host: the target-coloured subsampled layer union.
        auto subsampled = subsample_layers(host.layers, host.params.p_prime,
                                           host.params.p_tilde_prime, SplitRng(host.seed));
        std::vector<Edge> edges;
        for (const auto& a : subsampled)
          for (const auto& e : a.edges())
            if (colouring.has_edge_of(e.first, e.second, target)) edges.push_back(e);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Graph cycle_host(n, std::move(edges));
        double d_min = extraction.pair_densities.empty()
                           ? 0.0
                           : *std::min_element(extraction.pair_densities.begin(),
                                               extraction.pair_densities.end());
        if (endgame(target, extraction.sets, cycle_host,
                    d_min * host.params.p_tilde_dprime / std::max(1e-12, host.params.p_dprime),
                    "case-ii"))
          return result;
      } else {
        log("case-ii:sets", "densifier route failed at " + extraction.failed_stage);
      }
    }
    // Certificate branch (also the fallback when densifiers fell short).
    {
      std::vector<CliqueCertificate> certificates;
      for (const auto& layer : dichotomy)
        for (const auto& cert : layer.certificates) certificates.push_back(cert);
      if (!certificates.empty()) {
        auto extraction = find_regular_red_sets_from_cliques(
            host.base, colouring, probe_set, certificates, host.params.C_prime,
            host.params.C, host.params.p, rs, rng, options.limits);
        if (extraction.success) {
          log("case-ii:sets", "certificate route extracted " +
                                  std::to_string(extraction.sets.size()) + " sets");
          Graph g_tilde = subsample_blocks(host.base, host.design, host.present_blocks,
                                           host.params.p, host.params.p_tilde,
                                           SplitRng(host.seed));
          std::vector<Edge> edges;
          for (const auto& e : g_tilde.edges())
            if (colouring.has_edge_of(e.first, e.second, target)) edges.push_back(e);
          Graph cycle_host(n, std::move(edges));
          double d_min = extraction.pair_densities.empty()
                             ? 0.0
                             : *std::min_element(extraction.pair_densities.begin(),
                                                 extraction.pair_densities.end());
          if (endgame(target, extraction.sets, cycle_host,
                      d_min * host.params.p_tilde / std::max(1e-12, host.params.p),
                      "case-ii"))
            return result;
        } else {
          log("case-ii:sets", "certificate route failed at " + extraction.failed_stage);
        }
      }
    }
    log("case-ii", "exhausted; falling through to case-i machinery");
  }

  // ---- Case I: both colours rich; work inside the subsampled base --------
  Graph g_tilde = subsample_blocks(host.base, host.design, host.present_blocks,
                                   host.params.p, host.params.p_tilde, SplitRng(host.seed));
  for (Colour target : {Colour::red, Colour::blue}) {
    std::vector<Edge> edges;
    for (const auto& e : g_tilde.edges())
      if (colouring.has_edge_of(e.first, e.second, target)) edges.push_back(e);
    Graph cycle_host(n, edges);
    auto extraction = extract_regular_sets(cycle_host, host.params.p_tilde, set_count, {},
                                           options, rng.fork(SplitRng::kPartition, 77));
    if (!extraction.success) {
      log(std::string("case-i:") + colour_name(target), extraction.note);
      continue;
    }
    log(std::string("case-i:") + colour_name(target),
        "extracted " + std::to_string(extraction.sets.size()) + " sets, min density " +
            std::to_string(extraction.min_density));
    // Cleanup pass; collapse is a stage failure for this colour.
    std::vector<std::vector<Vertex>> sets = extraction.sets;
    try {
      auto cleaned = cleanup_partition(cycle_host, sets, extraction.min_density / 2.0);
      sets = cleaned.sets;
    } catch (const Error& e) {
      log(std::string("case-i:") + colour_name(target),
          std::string("cleanup collapsed: ") + e.what());
      continue;
    }
    if (endgame(target, sets, cycle_host, extraction.min_density, "case-i")) return result;
  }

  result.failure = "all routes exhausted without a validated embedding";
  return result;
}

}  // namespace ramsey
