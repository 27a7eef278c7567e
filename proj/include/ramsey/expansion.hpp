#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

struct ExpansionReport {
  bool pass = false;
  bool certified = false;            // exhaustive mode ran to completion
  std::vector<Vertex> witness;       // a set X with |N(X)| < d |X| when found
  std::size_t witness_neighbourhood = 0;
};

// (s,d)-expansion: every X with 1 <= |X| <= s has |N(X)| >= d |X|.
// Exhaustive when s <= 3 (any n up to the pair/triple budget) or n <= 20;
// randomized witness probes otherwise, so a pass is then a non-certificate.
ExpansionReport expansion_check(const Graph& g, int s, double d,
                                const SplitRng& rng = SplitRng(0), int probes = 2000);

struct PruneResult {
  std::vector<Vertex> kept;
  std::vector<Vertex> removed;
  bool success = false;       // remainder passed the expansion check
  bool hypothesis_ok = false; // |N(X)| >= 3Ks held for the size-s sets probed
};

// Removes the most deficient witness sets until the remainder is
// (s,K)-expanding or the removed set reaches size s (then a failure report).
PruneResult prune_to_expander(const Graph& g, int s, double k_factor,
                              const SplitRng& rng = SplitRng(0));

struct JointReport {
  bool pass = false;
  bool certified = false;
  std::vector<Vertex> witness_s;  // disjoint alpha-n sets with no edge between
  std::vector<Vertex> witness_t;
};

// alpha-jointness: every pair of disjoint ceil(alpha n)-sets spans an edge.
JointReport alpha_joint_check(const Graph& g, double alpha,
                              const SplitRng& rng = SplitRng(0), int probes = 2000);

}  // namespace ramsey
