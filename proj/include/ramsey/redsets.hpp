#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/densifier.hpp"
#include "ramsey/regularity.hpp"

namespace ramsey {

// A block certificate for the clique route: inside (R n B) - B' one colour
// has no K_{C'}, so the block's surviving part is dense in the other colour.
struct CliqueCertificate {
  int block_index = -1;
  std::vector<Vertex> base;     // the qualifying subset of block n R
  std::vector<Vertex> excess;   // B': vertices removed before the no-clique claim
};

struct RegularRedSetsResult {
  bool success = false;
  std::string failed_stage;  // empty on success
  std::string detail;
  std::vector<std::vector<Vertex>> sets;          // K sets on success
  std::vector<RegularPairReport> pair_reports;    // pairwise, row-major i<j
  std::vector<double> pair_densities;             // aligned with pair_reports
  double density_target = 0.0;                    // tau * scale, informational
  // Stage diagnostics.
  int certificates_validated = 0;
  int qualifying_blocks = 0;
  std::vector<std::pair<int, int>> meta_red_pairs;
};

struct RedSetsOptions {
  int set_count = 3;          // K, the paper-shape 21 at full scale
  double eps = 0.25;
  int t0 = 8;
  int t_max = 24;
  double beta = 0.05;          // nicely-distributed slack
  double xi = 1.0 / 200.0;     // intersection bar constant
  // Meta-edge threshold: absolute count when >= 0, otherwise the relative
  // mode (fraction of the maximum observed pair count).
  double absolute_threshold = -1.0;
  double relative_threshold = 0.25;
  int randomized_trials = 60;
  int max_rounds = 6;
  Colour colour = Colour::red;  // colour whose density is being certified
};

// The clique route: validate certificates, regularity-partition the target
// colour subgraph of g[R], keep nicely distributed certified blocks, colour
// part pairs by their dense-edge count, and search a K-clique of dense
// regular pairs among the parts.
RegularRedSetsResult find_regular_red_sets_from_cliques(
    const Graph& g, const TwoColoring& colouring, const std::vector<Vertex>& r_set,
    const std::vector<CliqueCertificate>& certificates, int c_prime, int c_block_size,
    double p_scale, const RedSetsOptions& options, const SplitRng& rng,
    const SearchLimits& limits = {});

// The densifier route: regularity-partition the target colour subgraph of the
// layer union on R, score (tuple, layer) niceness through the densifier
// families, pick the best tuple, and report its pairwise densities against
// tau * p''.
RegularRedSetsResult find_regular_red_sets_from_densifiers(
    const LayerSet& layers, const TwoColoring& colouring, const std::vector<Vertex>& r_set,
    const std::vector<std::optional<Densifier>>& densifiers, double p_scale, double tau,
    const RedSetsOptions& options, const SplitRng& rng);

}  // namespace ramsey
