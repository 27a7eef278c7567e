#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/designs.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// Exact edge density e(A,B) / (|A| |B|) between disjoint non-empty sets.
Rational pair_density(const Graph& g, const std::vector<Vertex>& a,
                      const std::vector<Vertex>& b);

enum class RegularityMode { exact, randomized };

struct RegularPairReport {
  std::vector<Vertex> set_a;
  std::vector<Vertex> set_b;
  double density = 0.0;
  double epsilon = 0.0;
  double p_scale = 1.0;
  enum class Verdict { regular, irregular_with_witness, search_capped } verdict =
      Verdict::regular;
  std::vector<Vertex> witness_a;  // populated for irregular pairs
  std::vector<Vertex> witness_b;
  double witness_density = 0.0;
  RegularityMode mode = RegularityMode::exact;
  int randomized_trials = 0;  // trials used in randomized mode
};

// Checks |d(U1,U2) - d(A,B)| <= eps * p_scale over all U1, U2 with
// |U1| >= eps |A|, |U2| >= eps |B|.
//
// Exact mode (|A|, |B| <= 16): enumerates subsets of one side; for a fixed U1
// the extreme densities over same-size U2 are attained by the top/bottom
// degree vertices, so the other side needs only sorted prefix sums. Exact
// mode above the cap reports search_capped.
//
// Randomized mode: witness search by greedy density extremisation from random
// seeds; "regular" is then a non-certificate.
RegularPairReport regularity_check(const Graph& g, const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b, double eps, double p_scale,
                                   RegularityMode mode, const SplitRng& rng = SplitRng(0),
                                   int randomized_trials = 200);

// Re-evaluates a witness straight from the definitions.
bool witness_violates(const Graph& g, const RegularPairReport& report);

struct UpperUniformityReport {
  bool violation_found = false;
  std::vector<Vertex> set_u;
  std::vector<Vertex> set_w;
  double observed_density_ratio = 0.0;  // e(U,W) / (p |U| |W|) at the witness
  RegularityMode mode = RegularityMode::exact;
  int probes = 0;
};

// Searches disjoint U, W with |U|,|W| >= gamma n and
// e(U,W) > (1 + gamma) p |U| |W|. Exact for n <= 20, randomized above.
UpperUniformityReport upper_uniformity_check(const Graph& g, double gamma, double p_scale,
                                             RegularityMode mode,
                                             const SplitRng& rng = SplitRng(0),
                                             int probes = 2000);

struct CleanupResult {
  std::vector<std::vector<Vertex>> sets;
  std::vector<double> retention;  // kept fraction per set
  int rounds = 0;
};

// Iteratively deletes vertices whose degree into some other current set drops
// below d_min times that set's current size; returns the fixed point. Throws
// cleanup-collapsed if a set empties.
CleanupResult cleanup_partition(const Graph& g, std::vector<std::vector<Vertex>> sets,
                                double d_min);

struct PartitionResult {
  std::vector<std::vector<Vertex>> parts;
  std::vector<RegularPairReport> pair_reports;  // one per unordered pair
  std::vector<std::pair<int, int>> irregular_pairs;
  int rounds = 0;
  int witnesses_found = 0;
};

// Heuristic equipartition refinement: start from a seeded or random
// equipartition, split parts along discovered witnesses, rebalance, repeat.
// Irregular pairs that survive are reported, never hidden.
PartitionResult regularity_partition(
    const Graph& g, double eps, double p_scale, int t0, int t_max, const SplitRng& rng,
    std::optional<std::vector<std::vector<Vertex>>> initial_parts = std::nullopt,
    int max_rounds = 12, int randomized_trials = 60);

struct NicelyDistributedBlock {
  int block_index = 0;
  int parts_meeting_bar = 0;
  bool qualifies = false;
};

struct NicelyDistributedReport {
  std::vector<NicelyDistributedBlock> blocks;
  std::vector<int> qualifying;  // block indices meeting the (1-beta) fraction
  double bar = 0.0;             // xi * C / t_total
  double achieved_fraction = 0.0;
};

// For each candidate block, counts the parts V_i with |B0 n V_i| >= xi C / t
// and keeps the blocks for which at least (1 - beta) t parts qualify.
NicelyDistributedReport nicely_distributed_blocks(
    const std::vector<std::vector<Vertex>>& parts,
    const std::vector<std::pair<int, std::vector<Vertex>>>& blocks_with_b0, double beta,
    int c_block_size, int t_total, double xi = 1.0 / 200.0);

struct TransferCheck {
  RegularPairReport before;
  RegularPairReport after;
  double before_density_ratio = 0.0;  // d_before / scale_before
  double after_density_ratio = 0.0;   // d_after / scale_after
  bool after_regular_at_4eps = false;
  bool half_density_met = false;  // after ratio >= before ratio / 2
};

// Verifies regularity and density transfer from a graph to its subsample on
// the same vertex sets; a statistical target at desk scale, reported per call.
TransferCheck subsample_regularity_transfer_check(
    const Graph& before, const Graph& after, const std::vector<Vertex>& a,
    const std::vector<Vertex>& b, double eps, double scale_before, double scale_after,
    RegularityMode mode, const SplitRng& rng = SplitRng(0));

}  // namespace ramsey
