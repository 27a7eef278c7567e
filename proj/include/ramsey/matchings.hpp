#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ramsey/designs.hpp"
#include "ramsey/models.hpp"

namespace ramsey {

struct MatchingCollection {
  std::vector<std::vector<int>> matchings;  // block indices, pairwise vertex-disjoint
  std::vector<Vertex> coverage;             // covered vertices per matching
  std::vector<int> leftover_blocks;         // blocks in no surviving matching
  int dissolved = 0;                        // matchings below the coverage bar
  int z_target = 0;
  // The asymptotic window [(1-eta)(n-1)p/(C-1), (1+eta)(n-1)p/(C-1)],
  // reported for comparison, never asserted.
  double z_window_low = 0.0;
  double z_window_high = 0.0;

  int z() const { return static_cast<int>(matchings.size()); }
};

// First-fit greedy partition of the present blocks into block matchings,
// processing blocks by descending conflict degree (canonical order on ties).
// Matchings covering fewer than (1-eta) n vertices are dissolved afterwards
// and their blocks reported as leftover. Falling short of z_target is data,
// not an error.
MatchingCollection partition_blocks_into_matchings(const std::vector<int>& present_blocks,
                                                   const BlockDesign& d, double eta,
                                                   int z_target, double p = 0.0);

struct BlocksMeetingSet {
  bool applicable = false;  // preconditions: coverage >= (1-gamma) n, |S| >= 4 gamma n
  std::vector<int> blocks;  // blocks h with |h n S| >= gamma C / 2
  bool count_at_least_bound = false;  // blocks.size() >= |S| / (2C)
  double bound = 0.0;
};

BlocksMeetingSet blocks_meeting_set(const std::vector<int>& matching, const BlockDesign& d,
                                    const std::vector<Vertex>& set, double gamma,
                                    Vertex host_n);

struct MultiplicityReport {
  std::map<int, std::uint64_t> histogram;  // multiplicity -> edge count
  std::uint64_t edges_in_multiple = 0;     // multiplicity >= 2
  bool multiplicity_five_or_more = false;
  bool multiple_exceeds_n_to_three_halves = false;
};

// Exact multiplicity histogram of edges across the layer graphs A_1..A_z.
MultiplicityReport edge_multiplicity_report(const LayerSet& layers);

}  // namespace ramsey
