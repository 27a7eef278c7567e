#pragma once

#include <optional>
#include <vector>

#include "ramsey/designs.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/params.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// G(n,p): each pair present independently. Identical seed, identical graph.
Graph sample_gnp(Vertex n, double p, const SplitRng& rng);

// Uniform-ish random cubic graph via the pairing model with rejection of
// loops and parallel edges. n must be even and at least 4.
Graph sample_random_cubic(Vertex n, const SplitRng& rng);

struct BlockModelSample {
  Graph graph;
  std::vector<int> present_blocks;  // indices into the design's block list
};

// The block model: each design block's full edge set appears independently
// with probability p. Blocks partition the pairs, so no edge collisions.
BlockModelSample sample_block_model(const BlockDesign& d, double p, const SplitRng& rng);

// Conditional non-empty edge-subset law used by both subsampling steps:
// P[subset] = q^{|subset|} (1-q)^{m-|subset|} / p_unit  for non-empty subsets
// of an m-edge unit, with p_unit = 1-(1-q)^m. Sampling is exact: the size is
// drawn by inverse CDF over the conditional binomial, then a uniform subset
// of that size. max_exact_edges bounds m for the exact path; above it a
// rejection sampler (m independent q-coins, redrawn while all-empty) is used.
std::vector<int> sample_conditional_nonempty_subset(int m, double q, SplitRng& rng,
                                                    int max_exact_edges = 64);

// Subsample of a block-model outcome: per present block, a non-empty subset
// of its edges with the conditional law at p_tilde. Throws block-too-large
// when C(C,2) exceeds the exact cap.
Graph subsample_blocks(const Graph& g, const BlockDesign& d,
                       const std::vector<int>& present_blocks, double p, double p_tilde,
                       const SplitRng& rng);

// One bipartite layer family: skeleton G_i ~ G(n_i, p') on the blocks of the
// i-th matching, A_i the complete-bipartite blow-up of G_i along the blocks,
// A'_i the same blow-up of G_i^3.
struct LayerSet {
  const BlockDesign* design = nullptr;
  std::vector<std::vector<int>> matchings;  // block indices per matching
  std::vector<Graph> skeletons;             // G_i on |M_i| vertices
  std::vector<Graph> layers;                // A_i on the host vertex set
  std::vector<Graph> layers_cubed;          // A'_i on the host vertex set
  // block_of[i][j] = design block index of skeleton vertex j in layer i.
  std::vector<std::vector<int>> block_of;
};

LayerSet build_layers(const BlockDesign& d, const std::vector<std::vector<int>>& matchings,
                      Vertex host_n, double p_prime, const SplitRng& rng);

// Subsample of the layers: per biclique of A_i (one per skeleton edge), a
// non-empty edge subset with the conditional law at p_tilde_prime. Falls back
// to rejection sampling when C^2 exceeds the exact cap.
std::vector<Graph> subsample_layers(const LayerSet& layers, double p_prime,
                                    double p_tilde_prime, const SplitRng& rng,
                                    int max_exact_edges = 15);

struct CouplingSample {
  Graph full;       // F = F_1 u ... u F_z ~ G(n, p~'')
  Graph restricted;  // L: the F_i edges joining two distinct blocks of M_i
  bool contained = false;  // witness that L is a subgraph of F
};

// The multiple-exposure coupling: F_i ~ G(n, p~') per layer, F their union,
// L_i the F_i edges between distinct blocks of M_i. L has the law of the
// subsampled layer union and sits inside F by construction.
CouplingSample couple_layers_into_gnp(const BlockDesign& d,
                                      const std::vector<std::vector<int>>& matchings,
                                      Vertex host_n, double p_tilde_prime,
                                      const SplitRng& rng);

}  // namespace ramsey
