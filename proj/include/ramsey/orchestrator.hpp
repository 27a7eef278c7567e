#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/blowup_pipeline.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/cycles.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/host.hpp"
#include "ramsey/treewidth.hpp"

namespace ramsey {

struct RamseyEmbedOptions {
  int probe_layers = 3;       // layers probed per colour for blow-up presence
  int probe_samples = 2;      // sampled vertex sets per deficiency probe
  double case2_fraction = 0.75;  // |V'| as a fraction of n
  long node_budget = 400000;
  int blowup_t = 2;           // per-block clique size in the layer pipeline
  int blowup_s = 1;           // biclique witness size
  double eps = 0.25;
  double relative_threshold = 0.2;  // meta-edge density threshold (relative)
  int t_extra = 3;            // partition slack above the needed set count
  int randomized_trials = 40;
  int partition_rounds = 3;
  int min_candidates = 2;
  SearchLimits limits;
};

struct StageRecord {
  std::string stage;
  std::string outcome;
};

struct RamseyEmbedResult {
  bool success = false;
  Colour colour = Colour::red;
  EmbeddingMap map;  // the full pattern into the host
  std::vector<StageRecord> stages;
  std::string failure;
  std::string case_taken;  // "case-i" or "case-ii"
};

// End-to-end pipeline: decompose the pattern, build the remainder container,
// probe both colours of Gamma for the container blow-up, then either the
// subsampled-base route (case I) or the dichotomy route over the layers
// (case II), finishing with the container embedding into the last regular set
// and the cycle pipeline over the rest. The returned embedding is always
// re-validated against the host and the claimed colour.
RamseyEmbedResult ramsey_embed(const LayeredHost& host, const TwoColoring& colouring,
                               const Graph& pattern, const RamseyEmbedOptions& options,
                               const SplitRng& rng);

}  // namespace ramsey
