#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/densifier.hpp"
#include "ramsey/embedding_map.hpp"
#include "ramsey/models.hpp"
#include "ramsey/redsets.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

// Auxiliary colouring with a configurable witness colour: edge {i,j} of K_m
// is marked blue exactly when a K_{s,s} of witness_colour sits between parts
// i and j.
TwoColoring aux_for_colour(const TwoColoring& colouring,
                           const std::vector<std::vector<Vertex>>& parts, int s,
                           Colour witness_colour, const SearchLimits& limits = {});

struct TreeOrQPartiteResult {
  enum class Outcome { blue_tree, red_parts, dual_failure } outcome =
      Outcome::dual_failure;
  EmbeddingMap tree_map;                    // tree vertex -> meta vertex
  std::vector<std::vector<Vertex>> parts;   // red branch: q meta-vertex sets
  std::string diagnostics;
};

// On a coloured complete meta graph: first a blue embedding of the requested
// tree, else q disjoint meta-vertex sets of size >= ceil(N/(5 d q)) with all
// cross pairs red (groupings of blue components; exhaustive packing fallback
// for N <= 16). Both may fail at desk scale; the dichotomy only holds under
// the size hypothesis, which is flagged, not enforced.
TreeOrQPartiteResult tree_or_qpartite(const TwoColoring& meta, const RootedTree& tree,
                                      int n0, int d, int q, long node_budget = 0);

struct BicliqueWitness {
  std::vector<Vertex> side_a;  // inside the part of the smaller T' endpoint
  std::vector<Vertex> side_b;
};

struct LiftResult {
  bool success = false;
  EmbeddingMap map;  // pattern is T boxtimes K_k
  std::string failure;
};

// Builds a monochromatic copy of T boxtimes K_k from a tree embedding in the
// auxiliary colouring: intra-part cliques carry the tree vertices assigned to
// each part, the recorded K_{s,s} witnesses carry the cross-part edges.
// witnesses are keyed by T'-edges as (min,max) of the T'-vertex ids; a
// missing key raises witness-incomplete.
LiftResult lift_blue_tree(const TwoColoring& colouring,
                          const std::vector<std::vector<Vertex>>& parts, int s,
                          const std::vector<int>& t_prime_to_part, const RootedTree& tree,
                          int k,
                          const std::map<std::pair<int, int>, BicliqueWitness>& witnesses,
                          Colour clique_colour = Colour::blue);

struct DensePairsLiftResult {
  bool success = false;
  bool density_hypothesis_met = false;
  EmbeddingMap map;  // image inside f{t}'s vertex numbering
};

// Picks one slot per class of the blow-up f{t} so that every f-edge lands on
// an f_prime edge; backtracking, complete at our scales. The
// (1 - 1/(8 max_degree)) t^2 per-pair floor is checked and reported; the
// search proceeds best effort when it fails.
DensePairsLiftResult dense_pairs_lift(const Graph& f, const Graph& f_prime, int t,
                                      int delta_max, long node_budget = 0);

struct BlowupEmbedParams {
  int t = 2;                  // per-block monochromatic clique size
  int s = 1;                  // biclique witness size
  int k = 1;                  // class size of the requested blow-up
  int q_parts = 0;            // 0: derived as 2k+1
  int min_block_overlap = 2;  // |B n S| floor for usable blocks
  long node_budget = 200000;
  SearchLimits limits;
};

struct BlowupEmbedResult {
  bool success = false;
  Colour colour = Colour::red;
  EmbeddingMap map;  // pattern: T boxtimes K_k on the host vertex set
  std::vector<std::string> stage_log;
  std::string failure;
};

// The layer pipeline for one L = A'_i u M_i-cliques: per-block monochromatic
// K_t's, majority colour, auxiliary colouring over the block cliques, then
// either the chopping branch (tree in the auxiliary colouring, lifted through
// witnesses) or the partner branch (skeleton tree with per-node partner
// blocks, transferred through dense_pairs_lift over the opposite colour).
// colour_filter restricts which colours may be produced.
BlowupEmbedResult monochromatic_tree_blowup(const LayerSet& layers, int layer_index,
                                            const TwoColoring& colouring,
                                            const RootedTree& tree,
                                            const std::vector<Vertex>& s_set,
                                            const BlowupEmbedParams& params,
                                            std::optional<Colour> colour_filter = std::nullopt);

struct LayerDichotomy {
  enum class Kind { densifier, certificates, blue_tree_found, unusable } kind =
      Kind::unusable;
  std::optional<Densifier> densifier;
  std::vector<CliqueCertificate> certificates;
  std::string note;
};

struct QPartitionParams {
  int c_prime = 2;
  double rho = 0.67;   // certificate excess bound: |B'| <= rho * C
  int s = 1;
  int q = 3;
  int min_block_overlap = 2;
  long node_budget = 100000;
  SearchLimits limits;
};

// Per layer: greedily extract avoid-coloured K_{C'}'s inside each qualifying
// block n S. If at least half the blocks stall below rho C covered, emits
// clique certificates; otherwise runs the auxiliary-colouring q-partite route
// over the extracted cliques and assembles a densifier.
std::vector<LayerDichotomy> qpartition_or_cliques(const LayerSet& layers,
                                                  const TwoColoring& colouring,
                                                  const std::vector<Vertex>& s_set,
                                                  const RootedTree& tree_for_dichotomy,
                                                  Colour avoid_colour,
                                                  const QPartitionParams& params);

}  // namespace ramsey
