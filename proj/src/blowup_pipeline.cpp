#include "ramsey/blowup_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "ramsey/error.hpp"
#include "ramsey/tree_embed.hpp"

namespace ramsey {

TwoColoring aux_for_colour(const TwoColoring& colouring,
                           const std::vector<std::vector<Vertex>>& parts, int s,
                           Colour witness_colour, const SearchLimits& limits) {
  Vertex m = static_cast<Vertex>(parts.size());
  auto complete = share(Graph::complete(m));
  std::vector<Colour> colours(complete->edge_count(), Colour::red);
  for (std::size_t e = 0; e < complete->edge_count(); ++e) {
    auto [i, j] = complete->edges()[e];
    if (find_monochromatic_biclique(colouring, parts[i], parts[j], witness_colour, s,
                                    limits)
            .has_value())
      colours[e] = Colour::blue;
  }
  return TwoColoring(complete, std::move(colours));
}

namespace {

// Packs blue components into q bins, each reaching min_size. Greedy first
// (largest component to the lightest bin), exhaustive for small inputs.
std::optional<std::vector<std::vector<Vertex>>> pack_components(
    std::vector<std::vector<Vertex>> components, int q, int min_size, bool exhaustive) {
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  {
    std::vector<std::vector<Vertex>> bins(q);
    for (const auto& comp : components) {
      auto lightest = std::min_element(
          bins.begin(), bins.end(),
          [](const auto& a, const auto& b) { return a.size() < b.size(); });
      lightest->insert(lightest->end(), comp.begin(), comp.end());
    }
    bool ok = true;
    for (const auto& bin : bins) ok = ok && static_cast<int>(bin.size()) >= min_size;
    if (ok) {
      for (auto& bin : bins) std::sort(bin.begin(), bin.end());
      return bins;
    }
  }
  if (!exhaustive || components.size() > 16) return std::nullopt;
  // Exhaustive assignment with pruning on remaining mass.
  std::vector<std::vector<Vertex>> bins(q);
  std::vector<int> bin_size(q, 0);
  std::vector<int> suffix_mass(components.size() + 1, 0);
  for (int i = static_cast<int>(components.size()) - 1; i >= 0; --i)
    suffix_mass[i] = suffix_mass[i + 1] + static_cast<int>(components[i].size());
  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    int deficit = 0;
    for (int b = 0; b < q; ++b) deficit += std::max(0, min_size - bin_size[b]);
    if (deficit == 0) return true;
    if (idx >= components.size() || suffix_mass[idx] < deficit) return false;
    for (int b = 0; b < q; ++b) {
      bins[b].push_back(static_cast<Vertex>(idx));
      bin_size[b] += static_cast<int>(components[idx].size());
      if (place(idx + 1)) return true;
      bin_size[b] -= static_cast<int>(components[idx].size());
      bins[b].pop_back();
    }
    return place(idx + 1);
  };
  if (!place(0)) return std::nullopt;
  std::vector<std::vector<Vertex>> result(q);
  for (int b = 0; b < q; ++b)
    for (Vertex comp_idx : bins[b])
      result[b].insert(result[b].end(), components[comp_idx].begin(),
                       components[comp_idx].end());
  for (auto& bin : result) std::sort(bin.begin(), bin.end());
  return result;
}

}  // namespace

TreeOrQPartiteResult tree_or_qpartite(const TwoColoring& meta, const RootedTree& tree,
                                      int n0, int d, int q, long node_budget) {
  TreeOrQPartiteResult result;
  const Vertex n_meta = meta.host().vertex_count();
  if (static_cast<double>(n_meta) < 20.0 * n0 * d * q)
    result.diagnostics = "size hypothesis N >= 20 n0 d q not met; dichotomy not guaranteed";

  Graph blue = meta.colour_subgraph(Colour::blue);
  if (tree.vertex_count() <= n_meta) {
    auto embed = embed_tree_fp(blue, tree, std::max<Vertex>(tree.max_degree(), 1),
                               node_budget);
    if (embed.success) {
      result.outcome = TreeOrQPartiteResult::Outcome::blue_tree;
      result.tree_map = std::move(embed.map);
      return result;
    }
  }

  int min_size = std::max(1, static_cast<int>(std::ceil(
                                 static_cast<double>(n_meta) / (5.0 * d * q))));
  auto parts = pack_components(blue.connected_components(), q, min_size, n_meta <= 16);
  if (parts.has_value()) {
    result.outcome = TreeOrQPartiteResult::Outcome::red_parts;
    result.parts = std::move(*parts);
    return result;
  }
  result.outcome = TreeOrQPartiteResult::Outcome::dual_failure;
  if (result.diagnostics.empty()) result.diagnostics = "both branches failed";
  return result;
}

LiftResult lift_blue_tree(const TwoColoring& colouring,
                          const std::vector<std::vector<Vertex>>& parts, int s,
                          const std::vector<int>& t_prime_to_part, const RootedTree& tree,
                          int k,
                          const std::map<std::pair<int, int>, BicliqueWitness>& witnesses,
                          Colour clique_colour) {
  LiftResult result;
  std::vector<Vertex> to_tprime;
  RootedTree t_prime = truncate_tree(tree, &to_tprime);
  require(static_cast<int>(t_prime_to_part.size()) == t_prime.vertex_count(),
          ErrorCode::invalid_argument, "t_prime embedding size mismatch");

  auto depth = tree.depths();
  Vertex n_t = tree.vertex_count();

  // Part assignment: root and odd vertices to their own T' part, even
  // vertices to their parent's part.
  std::vector<int> part_of(n_t, -1);
  for (Vertex v = 0; v < n_t; ++v) {
    Vertex carrier = (depth[v] == 0 || depth[v] % 2 == 1) ? v : *tree.parent[v];
    part_of[v] = t_prime_to_part[to_tprime[carrier]];
  }

  auto witness_for = [&](Vertex tp_a, Vertex tp_b) -> const BicliqueWitness* {
    auto key = std::make_pair(std::min<int>(tp_a, tp_b), std::max<int>(tp_a, tp_b));
    auto it = witnesses.find(key);
    return it == witnesses.end() ? nullptr : &it->second;
  };
  auto side_at = [&](const BicliqueWitness& w, Vertex tp_vertex, Vertex tp_other) {
    return tp_vertex < tp_other ? w.side_a : w.side_b;
  };

  // Pool per T-vertex: its part intersected with the relevant witness sides.
  std::vector<std::vector<Vertex>> pool(n_t);
  auto children = tree.children();
  for (Vertex v = 0; v < n_t; ++v) {
    std::vector<Vertex> candidates = parts[part_of[v]];
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::pair<Vertex, Vertex>> constraining;  // T'-edge endpoints (self first)
    if (depth[v] == 0) {
      for (Vertex c : children[v]) constraining.push_back({to_tprime[v], to_tprime[c]});
    } else if (depth[v] % 2 == 1) {
      Vertex carrier_parent = depth[v] == 1 ? tree.root : *tree.parent[*tree.parent[v]];
      constraining.push_back({to_tprime[v], to_tprime[carrier_parent]});
    } else {
      Vertex w = *tree.parent[v];
      for (Vertex c : children[v]) constraining.push_back({to_tprime[w], to_tprime[c]});
    }
    for (auto [tp_self, tp_other] : constraining) {
      const BicliqueWitness* w = witness_for(tp_self, tp_other);
      if (w == nullptr)
        fail(ErrorCode::witness_incomplete,
             "witness-incomplete: missing biclique witness for a truncation edge");
      auto side = side_at(*w, tp_self, tp_other);
      std::sort(side.begin(), side.end());
      std::vector<Vertex> merged;
      std::set_intersection(candidates.begin(), candidates.end(), side.begin(), side.end(),
                            std::back_inserter(merged));
      candidates = std::move(merged);
    }
    pool[v] = std::move(candidates);
  }

  // Greedy disjoint selection in BFS order.
  std::set<Vertex> used;
  std::vector<std::vector<Vertex>> chosen(n_t);
  for (Vertex v : tree.bfs_order()) {
    for (Vertex cand : pool[v]) {
      if (used.count(cand)) continue;
      chosen[v].push_back(cand);
      used.insert(cand);
      if (static_cast<int>(chosen[v].size()) == k) break;
    }
    if (static_cast<int>(chosen[v].size()) < k) {
      result.failure = "insufficient pool at tree vertex " + std::to_string(v) +
                       " (need " + std::to_string(k) + ", pool " +
                       std::to_string(pool[v].size()) + ")";
      return result;
    }
  }

  auto blowup = blow_up(tree.as_graph(), k, BlowUpKind::clique);
  EmbeddingMap map;
  map.pattern = share(std::move(blowup.graph));
  map.image.resize(static_cast<std::size_t>(n_t) * k);
  for (Vertex v = 0; v < n_t; ++v)
    for (int i = 0; i < k; ++i) map.image[v * k + i] = chosen[v][i];

  auto violations = validate_embedding(map, colouring.host(), colouring, clique_colour);
  if (!violations.empty()) {
    result.failure = "lifted copy failed validation (" +
                     std::to_string(violations.size()) + " violations)";
    return result;
  }
  result.success = true;
  result.map = std::move(map);
  (void)s;
  return result;
}

DensePairsLiftResult dense_pairs_lift(const Graph& f, const Graph& f_prime, int t,
                                      int delta_max, long node_budget) {
  require(t >= 1, ErrorCode::invalid_argument, "class size must be positive");
  require(f_prime.vertex_count() == f.vertex_count() * t, ErrorCode::invalid_argument,
          "f_prime must live on the blow-up vertex set");
  DensePairsLiftResult result;

  // Density hypothesis: per f-edge at least (1 - 1/(8 delta_max)) t^2 edges.
  double floor_edges =
      (1.0 - 1.0 / (8.0 * std::max(1, delta_max))) * static_cast<double>(t) * t;
  result.density_hypothesis_met = true;
  for (const auto& [a, b] : f.edges()) {
    int count = 0;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (f_prime.has_edge(a * t + i, b * t + j)) ++count;
    if (static_cast<double>(count) < floor_edges - 1e-12) {
      result.density_hypothesis_met = false;
      break;
    }
  }

  // Backtracking slot selection, most-constrained-first via BFS order.
  Vertex n_f = f.vertex_count();
  std::vector<int> slot(n_f, -1);
  std::vector<Vertex> order;
  std::vector<char> seen(n_f, 0);
  for (Vertex s = 0; s < n_f; ++s) {
    if (seen[s]) continue;
    order.push_back(s);
    seen[s] = 1;
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (Vertex w : f.neighbors(order[head]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  long explored = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    if (node_budget > 0 && explored >= node_budget) return false;
    Vertex v = order[idx];
    for (int cand = 0; cand < t; ++cand) {
      bool ok = true;
      for (Vertex w : f.neighbors(v)) {
        if (slot[w] < 0) continue;
        if (!f_prime.has_edge(v * t + cand, w * t + slot[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++explored;
      slot[v] = cand;
      if (place(idx + 1)) return true;
      slot[v] = -1;
      if (node_budget > 0 && explored >= node_budget) return false;
    }
    return false;
  };
  if (!place(0)) return result;
  result.success = true;
  result.map.pattern = share(f);
  result.map.image.resize(n_f);
  for (Vertex v = 0; v < n_f; ++v) result.map.image[v] = v * t + slot[v];
  return result;
}

namespace {

// A tree embedded in the skeleton with k distinct partner blocks per node;
// the partner blocks carry the classes of the block-level T boxtimes K_k.
struct PartneredTree {
  std::vector<Vertex> node_block;                 // tree vertex -> skeleton vertex
  std::vector<std::vector<Vertex>> partner_blocks;  // tree vertex -> k skeleton vertices
};

std::optional<PartneredTree> find_partnered_subtree(const Graph& skeleton,
                                                    const std::vector<char>& usable,
                                                    const RootedTree& tree, int k,
                                                    long node_budget) {
  auto order = tree.bfs_order();
  PartneredTree out;
  out.node_block.assign(tree.vertex_count(), -1);
  out.partner_blocks.assign(tree.vertex_count(), {});
  std::vector<char> taken(skeleton.vertex_count(), 0);
  long explored = 0;

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    if (node_budget > 0 && explored >= node_budget) return false;
    Vertex tv = order[idx];
    auto parent = tree.parent[tv];
    std::vector<Vertex> candidates;
    if (parent.has_value()) {
      Vertex anchor = out.node_block[*parent];
      candidates.assign(skeleton.neighbors(anchor).begin(),
                        skeleton.neighbors(anchor).end());
    } else {
      candidates.resize(skeleton.vertex_count());
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (Vertex cand : candidates) {
      if (taken[cand] || !usable[cand]) continue;
      // Reserve k unused usable neighbours as partners.
      std::vector<Vertex> partners;
      for (Vertex nb : skeleton.neighbors(cand)) {
        if (taken[nb] || !usable[nb] || nb == cand) continue;
        partners.push_back(nb);
        if (static_cast<int>(partners.size()) == k) break;
      }
      if (static_cast<int>(partners.size()) < k) continue;
      ++explored;
      out.node_block[tv] = cand;
      out.partner_blocks[tv] = partners;
      taken[cand] = 1;
      for (Vertex p : partners) taken[p] = 1;
      if (place(idx + 1)) return true;
      taken[cand] = 0;
      for (Vertex p : partners) taken[p] = 0;
      out.node_block[tv] = -1;
      out.partner_blocks[tv].clear();
      if (node_budget > 0 && explored >= node_budget) return false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return out;
}

}  // namespace

BlowupEmbedResult monochromatic_tree_blowup(const LayerSet& layers, int layer_index,
                                            const TwoColoring& colouring,
                                            const RootedTree& tree,
                                            const std::vector<Vertex>& s_set,
                                            const BlowupEmbedParams& params,
                                            std::optional<Colour> colour_filter) {
  BlowupEmbedResult result;
  const BlockDesign& design = *layers.design;
  const Graph& skeleton = layers.skeletons[layer_index];
  const Graph& layer_cubed = layers.layers_cubed[layer_index];
  const auto& matching = layers.matchings[layer_index];
  const Vertex n_blocks = skeleton.vertex_count();

  std::vector<char> in_s(colouring.host().vertex_count(), 0);
  for (Vertex v : s_set) in_s[v] = 1;

  // Per block: the base set (block n S) and monochromatic K_t's per colour.
  std::vector<std::vector<Vertex>> base(n_blocks);
  std::vector<std::optional<std::vector<Vertex>>> clique_red(n_blocks), clique_blue(n_blocks);
  int red_blocks = 0, blue_blocks = 0;
  for (Vertex v = 0; v < n_blocks; ++v) {
    for (Vertex p : design.blocks[matching[v]])
      if (in_s[p]) base[v].push_back(p);
    if (static_cast<int>(base[v].size()) < std::max(params.t, params.min_block_overlap))
      continue;
    clique_red[v] =
        find_monochromatic_clique(colouring, base[v], Colour::red, params.t, params.limits);
    clique_blue[v] =
        find_monochromatic_clique(colouring, base[v], Colour::blue, params.t, params.limits);
    if (clique_red[v].has_value()) ++red_blocks;
    if (clique_blue[v].has_value()) ++blue_blocks;
  }
  result.stage_log.push_back("blocks with red K_t: " + std::to_string(red_blocks) +
                             ", blue K_t: " + std::to_string(blue_blocks));

  std::vector<Colour> targets;
  if (colour_filter.has_value()) {
    targets.push_back(*colour_filter);
  } else {
    Colour majority = blue_blocks >= red_blocks ? Colour::blue : Colour::red;
    targets.push_back(majority);
    targets.push_back(opposite(majority));
  }

  std::vector<Vertex> to_tprime;
  RootedTree t_prime = truncate_tree(tree, &to_tprime);
  int tree_degree = std::max<Vertex>(1, tree.max_degree());

  for (Colour target : targets) {
    // -------- Chopping branch: target-coloured cliques carry the tree. -----
    const auto& cliques = target == Colour::red ? clique_red : clique_blue;
    std::vector<Vertex> w_blocks;
    for (Vertex v = 0; v < n_blocks; ++v)
      if (cliques[v].has_value()) w_blocks.push_back(v);
    if (params.t >= params.s &&
        static_cast<int>(w_blocks.size()) >= t_prime.vertex_count()) {
      std::vector<std::vector<Vertex>> parts;
      for (Vertex v : w_blocks) parts.push_back(*cliques[v]);
      auto aux = aux_for_colour(colouring, parts, params.s, target, params.limits);
      Graph aux_blue = aux.colour_subgraph(Colour::blue);
      auto tree_embed = embed_tree_fp(aux_blue, t_prime,
                                      std::max<Vertex>(1, t_prime.max_degree()),
                                      params.node_budget);
      if (tree_embed.success) {
        std::vector<int> t_prime_to_part(t_prime.vertex_count());
        for (Vertex tp = 0; tp < t_prime.vertex_count(); ++tp)
          t_prime_to_part[tp] = tree_embed.map.image[tp];
        std::map<std::pair<int, int>, BicliqueWitness> witnesses;
        bool witness_ok = true;
        for (const auto& [ta, tb] : t_prime.as_graph().edges()) {
          auto wit = find_monochromatic_biclique(colouring, parts[t_prime_to_part[ta]],
                                                 parts[t_prime_to_part[tb]], target,
                                                 params.s, params.limits);
          if (!wit.has_value()) {
            witness_ok = false;
            break;
          }
          witnesses[{std::min(ta, tb), std::max(ta, tb)}] =
              BicliqueWitness{ta < tb ? wit->first : wit->second,
                              ta < tb ? wit->second : wit->first};
        }
        if (witness_ok) {
          auto lift = lift_blue_tree(colouring, parts, params.s, t_prime_to_part, tree,
                                     params.k, witnesses, target);
          if (lift.success) {
            result.success = true;
            result.colour = target;
            result.map = std::move(lift.map);
            result.stage_log.push_back(std::string("chopping branch produced a ") +
                                       colour_name(target) + " copy");
            return result;
          }
          result.stage_log.push_back("chopping lift failed (" + lift.failure + ")");
        } else {
          result.stage_log.push_back("chopping witnesses incomplete");
        }
      } else {
        result.stage_log.push_back(std::string("no tree in the ") + colour_name(target) +
                                   "-witness auxiliary colouring");
      }
    } else {
      result.stage_log.push_back(std::string("chopping branch skipped for ") +
                                 colour_name(target) + " (t < s or too few blocks)");
    }

    // -------- Partner branch: opposite-coloured cliques, target edges. -----
    const auto& anti_cliques = target == Colour::red ? clique_blue : clique_red;
    std::vector<char> usable(n_blocks, 0);
    int usable_count = 0;
    for (Vertex v = 0; v < n_blocks; ++v)
      if (anti_cliques[v].has_value()) {
        usable[v] = 1;
        ++usable_count;
      }
    if (usable_count < tree.vertex_count() * (params.k + 1)) {
      result.stage_log.push_back(std::string("partner branch skipped for ") +
                                 colour_name(target) + " (too few opposite-clique blocks)");
      continue;
    }

    std::optional<PartneredTree> partnered =
        find_partnered_subtree(skeleton, usable, tree, params.k, params.node_budget);
    if (!partnered.has_value()) {
      // Faithful fallback: q-partite parts over the opposite cliques, partner
      // selection through maximum matchings between the parts.
      std::vector<std::vector<Vertex>> parts_sets;
      std::vector<Vertex> w_index;
      for (Vertex v = 0; v < n_blocks; ++v)
        if (usable[v]) {
          parts_sets.push_back(*anti_cliques[v]);
          w_index.push_back(v);
        }
      auto aux = aux_for_colour(colouring, parts_sets, params.s, opposite(target),
                                params.limits);
      int q = params.q_parts > 0 ? params.q_parts : 2 * params.k + 1;
      auto dichotomy = tree_or_qpartite(aux, t_prime, tree.vertex_count(),
                                        tree_degree * tree_degree, q, params.node_budget);
      if (dichotomy.outcome == TreeOrQPartiteResult::Outcome::red_parts) {
        partnered = [&]() -> std::optional<PartneredTree> {
          const auto& meta_parts = dichotomy.parts;  // meta vertices = parts_sets idx
          // Matchings: M_j between the shrinking S and part j, by augmenting
          // paths on the skeleton.
          std::vector<Vertex> s_blocks;
          for (Vertex mv : meta_parts[0]) s_blocks.push_back(w_index[mv]);
          std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings_found;
          std::vector<std::map<Vertex, Vertex>> partner_of(q);
          for (int j = 1; j < q && static_cast<int>(s_blocks.size()) >= tree.vertex_count();
               ++j) {
            std::vector<Vertex> right;
            for (Vertex mv : meta_parts[j]) right.push_back(w_index[mv]);
            // Kuhn's augmenting paths.
            std::map<Vertex, Vertex> match_right;  // right block -> left block
            std::function<bool(Vertex, std::set<Vertex>&)> try_augment =
                [&](Vertex left, std::set<Vertex>& visited) -> bool {
              for (Vertex r : right) {
                if (visited.count(r) || !skeleton.has_edge(left, r)) continue;
                visited.insert(r);
                auto it = match_right.find(r);
                if (it == match_right.end() || try_augment(it->second, visited)) {
                  match_right[r] = left;
                  return true;
                }
              }
              return false;
            };
            for (Vertex l : s_blocks) {
              std::set<Vertex> visited;
              try_augment(l, visited);
            }
            std::vector<Vertex> covered;
            for (const auto& [r, l] : match_right) {
              partner_of[j][l] = r;
              covered.push_back(l);
            }
            std::sort(covered.begin(), covered.end());
            std::vector<Vertex> next_s;
            std::set_intersection(s_blocks.begin(), s_blocks.end(), covered.begin(),
                                  covered.end(), std::back_inserter(next_s));
            s_blocks = std::move(next_s);
          }
          if (static_cast<int>(s_blocks.size()) < tree.vertex_count()) return std::nullopt;
          // Tree inside the skeleton restricted to the surviving blocks.
          auto fp = embed_tree_fp(skeleton, tree, tree_degree, params.node_budget,
                                  &s_blocks);
          if (!fp.success) return std::nullopt;
          PartneredTree out;
          out.node_block.resize(tree.vertex_count());
          out.partner_blocks.assign(tree.vertex_count(), {});
          auto depth = tree.depths();
          for (Vertex tv = 0; tv < tree.vertex_count(); ++tv) {
            Vertex blk = fp.map.image[tv];
            out.node_block[tv] = blk;
            int start = depth[tv] % 2 == 0 ? 1 : params.k + 1;
            for (int j = start; j < start + params.k && j < q; ++j) {
              auto it = partner_of[j].find(blk);
              if (it == partner_of[j].end()) return std::nullopt;
              out.partner_blocks[tv].push_back(it->second);
            }
            if (static_cast<int>(out.partner_blocks[tv].size()) < params.k)
              return std::nullopt;
          }
          return out;
        }();
        if (!partnered.has_value())
          result.stage_log.push_back("matching route fell short of partner blocks");
      } else if (dichotomy.outcome == TreeOrQPartiteResult::Outcome::blue_tree) {
        result.stage_log.push_back("opposite-witness auxiliary colouring carries the tree "
                                   "(evidence against the branch precondition)");
      } else {
        result.stage_log.push_back("q-partite packing failed: " + dichotomy.diagnostics);
      }
    }
    if (!partnered.has_value()) {
      result.stage_log.push_back(std::string("partner branch failed for ") +
                                 colour_name(target));
      continue;
    }

    // Diagnostics: the no-opposite-K_{s,s} condition across used block pairs.
    // Block-level pattern: T boxtimes K_k with class c of node v on partner
    // block partner_blocks[v][c].
    auto f_blow = blow_up(tree.as_graph(), params.k, BlowUpKind::clique);
    const Graph& f = f_blow.graph;
    std::vector<Vertex> block_of_f(f.vertex_count());
    for (Vertex tv = 0; tv < tree.vertex_count(); ++tv)
      for (int c = 0; c < params.k; ++c)
        block_of_f[tv * params.k + c] = partnered->partner_blocks[tv][c];

    int kss_hits = 0;
    for (const auto& [fa, fb] : f.edges()) {
      Vertex ba = block_of_f[fa], bb = block_of_f[fb];
      if (ba == bb) continue;
      if (find_monochromatic_biclique(colouring, *anti_cliques[ba], *anti_cliques[bb],
                                      opposite(target), params.s, params.limits)
              .has_value())
        ++kss_hits;
    }
    if (kss_hits > 0)
      result.stage_log.push_back("opposite K_{s,s} present on " +
                                 std::to_string(kss_hits) + " used block pairs");

    // f_prime: target-coloured host edges between the opposite cliques of the
    // used blocks, restricted to bicliques the layer actually carries.
    std::vector<Edge> fprime_edges;
    for (const auto& [fa, fb] : f.edges()) {
      Vertex ba = block_of_f[fa], bb = block_of_f[fb];
      const auto& set_a = *anti_cliques[ba];
      const auto& set_b = *anti_cliques[bb];
      for (int i = 0; i < params.t; ++i)
        for (int j = 0; j < params.t; ++j) {
          Vertex u = set_a[i], v = set_b[j];
          if (u == v) continue;
          if (!layer_cubed.has_edge(u, v)) continue;
          if (!colouring.has_edge_of(u, v, target)) continue;
          fprime_edges.push_back({std::min<Vertex>(fa * params.t + i, fb * params.t + j),
                                  std::max<Vertex>(fa * params.t + i, fb * params.t + j)});
        }
    }
    std::sort(fprime_edges.begin(), fprime_edges.end());
    fprime_edges.erase(std::unique(fprime_edges.begin(), fprime_edges.end()),
                       fprime_edges.end());
    Graph f_prime(f.vertex_count() * params.t, std::move(fprime_edges));
    auto lifted = dense_pairs_lift(f, f_prime, params.t,
                                   std::max<Vertex>(1, f.max_degree()),
                                   params.node_budget);
    if (!lifted.success) {
      result.stage_log.push_back(std::string("dense-pair transfer failed for ") +
                                 colour_name(target));
      continue;
    }
    // Translate slots to host vertices.
    EmbeddingMap map;
    map.pattern = share(f);
    map.image.resize(f.vertex_count());
    for (Vertex fv = 0; fv < f.vertex_count(); ++fv) {
      int slot = lifted.map.image[fv] % params.t;
      map.image[fv] = (*anti_cliques[block_of_f[fv]])[slot];
    }
    auto violations = validate_embedding(map, colouring.host(), colouring, target);
    if (!violations.empty()) {
      result.stage_log.push_back("partner-branch copy failed validation");
      continue;
    }
    result.success = true;
    result.colour = target;
    result.map = std::move(map);
    result.stage_log.push_back(std::string("partner branch produced a ") +
                               colour_name(target) + " copy");
    return result;
  }

  result.failure = "no branch produced a copy in the allowed colours";
  return result;
}

std::vector<LayerDichotomy> qpartition_or_cliques(const LayerSet& layers,
                                                  const TwoColoring& colouring,
                                                  const std::vector<Vertex>& s_set,
                                                  const RootedTree& tree_for_dichotomy,
                                                  Colour avoid_colour,
                                                  const QPartitionParams& params) {
  std::vector<LayerDichotomy> result;
  const BlockDesign& design = *layers.design;
  std::vector<char> in_s(colouring.host().vertex_count(), 0);
  for (Vertex v : s_set) in_s[v] = 1;

  std::vector<Vertex> to_tprime;
  RootedTree t_prime = truncate_tree(tree_for_dichotomy, &to_tprime);
  int d_sq = std::max<Vertex>(1, tree_for_dichotomy.max_degree());
  d_sq = d_sq * d_sq;

  for (std::size_t li = 0; li < layers.matchings.size(); ++li) {
    LayerDichotomy layer_result;
    const auto& matching = layers.matchings[li];
    int qualifying = 0;
    int certified = 0;
    struct Saturated {
      int block = -1;
      std::vector<std::vector<Vertex>> extracted;  // disjoint avoid-K_{C'}s
    };
    std::vector<Saturated> saturated;
    std::vector<CliqueCertificate> certificates;

    for (int b : matching) {
      std::vector<Vertex> base;
      for (Vertex p : design.blocks[b])
        if (in_s[p]) base.push_back(p);
      if (static_cast<int>(base.size()) < params.min_block_overlap) continue;
      ++qualifying;
      double target_cover = params.rho * static_cast<double>(design.block_size);
      std::vector<Vertex> remaining = base;
      std::vector<std::vector<Vertex>> extracted;
      std::size_t covered = 0;
      while (static_cast<double>(covered) < target_cover) {
        auto clique = find_monochromatic_clique(colouring, remaining, avoid_colour,
                                                params.c_prime, params.limits);
        if (!clique.has_value()) break;
        covered += clique->size();
        std::vector<Vertex> next;
        for (Vertex v : remaining)
          if (std::find(clique->begin(), clique->end(), v) == clique->end())
            next.push_back(v);
        remaining = std::move(next);
        extracted.push_back(std::move(*clique));
      }
      if (static_cast<double>(covered) >= target_cover) {
        saturated.push_back({b, std::move(extracted)});
      } else {
        ++certified;
        CliqueCertificate cert;
        cert.block_index = b;
        cert.base = base;
        for (const auto& cl : extracted)
          cert.excess.insert(cert.excess.end(), cl.begin(), cl.end());
        std::sort(cert.excess.begin(), cert.excess.end());
        certificates.push_back(std::move(cert));
      }
    }

    if (qualifying == 0) {
      layer_result.kind = LayerDichotomy::Kind::unusable;
      layer_result.note = "no qualifying blocks";
      result.push_back(std::move(layer_result));
      continue;
    }
    if (2 * certified >= qualifying) {
      layer_result.kind = LayerDichotomy::Kind::certificates;
      layer_result.certificates = std::move(certificates);
      result.push_back(std::move(layer_result));
      continue;
    }

    // Densifier route over the extracted avoid-coloured cliques.
    std::vector<std::vector<Vertex>> parts;
    std::vector<int> part_block;
    for (const auto& sat : saturated)
      for (const auto& clique : sat.extracted) {
        parts.push_back(clique);
        part_block.push_back(sat.block);
      }
    if (static_cast<int>(parts.size()) < params.q) {
      layer_result.kind = LayerDichotomy::Kind::unusable;
      layer_result.note = "too few extracted cliques for q families";
      result.push_back(std::move(layer_result));
      continue;
    }
    auto aux = aux_for_colour(colouring, parts, params.s, avoid_colour, params.limits);
    auto dichotomy = tree_or_qpartite(aux, t_prime, tree_for_dichotomy.vertex_count(),
                                      d_sq, params.q, params.node_budget);
    if (dichotomy.outcome == TreeOrQPartiteResult::Outcome::blue_tree) {
      layer_result.kind = LayerDichotomy::Kind::blue_tree_found;
      layer_result.note = "auxiliary colouring carries the truncated tree; the "
                          "no-blow-up precondition fails here";
      result.push_back(std::move(layer_result));
      continue;
    }
    if (dichotomy.outcome == TreeOrQPartiteResult::Outcome::dual_failure) {
      layer_result.kind = LayerDichotomy::Kind::unusable;
      layer_result.note = "q-partite packing failed: " + dichotomy.diagnostics;
      result.push_back(std::move(layer_result));
      continue;
    }
    Densifier densifier;
    densifier.part_size = params.c_prime;
    densifier.s = params.s;
    densifier.q = params.q;
    densifier.families.resize(params.q);
    for (int fam = 0; fam < params.q; ++fam)
      for (Vertex meta : dichotomy.parts[fam]) {
        DensifierPart part;
        part.vertices = parts[meta];
        part.block_index = part_block[meta];
        densifier.families[fam].push_back(std::move(part));
      }
    std::size_t min_family = densifier.families.front().size();
    for (const auto& fam : densifier.families) min_family = std::min(min_family, fam.size());
    densifier.gamma = static_cast<double>(min_family) * params.c_prime /
                      static_cast<double>(colouring.host().vertex_count());
    auto check = validate_densifier(densifier, layers.layers[li], colouring, s_set,
                                    params.limits);
    if (check.valid) {
      layer_result.kind = LayerDichotomy::Kind::densifier;
      layer_result.densifier = std::move(densifier);
    } else {
      layer_result.kind = LayerDichotomy::Kind::unusable;
      layer_result.note = "assembled densifier failed validation: " +
                          (check.violations.empty() ? std::string("?") : check.violations[0]);
    }
    result.push_back(std::move(layer_result));
  }
  return result;
}

}  // namespace ramsey
