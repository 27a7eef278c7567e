#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/decomposition.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Per-pattern-vertex guidance for the cycle embedding: an anchor (an already
// embedded host vertex whose neighbourhood constrains v) or an explicit
// candidate set, plus the distance-2 class label phi(v).
struct CandidateAssignment {
  std::vector<int> phi;                         // class label per pattern vertex, -1 off-cycle
  std::vector<Vertex> anchor;                   // host vertex or -1
  std::vector<std::vector<Vertex>> candidates;  // explicit C_v, empty = none
  int class_count = 0;
};

// Greedy distance-2 colouring of the cycle vertices (square of the cycle
// union). For max degree 3 this needs at most 10 classes.
CandidateAssignment make_candidate_assignment(const Graph& h, const Decomposition& d);

struct AssignmentCheck {
  bool distance2_ok = false;
  bool anchors_ok = false;  // every anchor referenced at most 3 times
};

AssignmentCheck validate_candidate_assignment(const Graph& h, const Decomposition& d,
                                              const CandidateAssignment& a);

struct CycleEmbedResult {
  bool success = false;
  std::vector<Vertex> image;          // per cycle position
  std::vector<Vertex> deepest_partial;  // best prefix on failure
  long nodes_explored = 0;
  std::string error;  // "cycle-embedding-failed" on exhaustion
};

// Backtracking with forward checking, most-constrained position first: each
// cycle position lands inside its candidate set, consecutive positions on
// host edges, all images distinct.
CycleEmbedResult embed_cycle(const Graph& host, int cycle_length,
                             const std::vector<std::vector<Vertex>>& candidates,
                             long node_budget = 0);

struct CyclesPipelineResult {
  bool success = false;
  std::string failed_stage;  // "half-selection" or "cycle-embedding"
  int failed_cycle = -1;
  Vertex failed_vertex = -1;
  std::vector<Vertex> image;  // indexed by pattern vertex, -1 where unset
  long nodes_explored = 0;
};

// The regular-pairs pipeline: cycles in decomposition order; per vertex the
// anchor is the image of an earlier embedded neighbour or the assignment's
// anchor; b_v is the first half family of class phi(v) offering at least
// min_candidates unoccupied anchored candidates; each cycle then goes through
// embed_cycle against the occupied set.
CyclesPipelineResult embed_cycles_pipeline(
    const Graph& host, const std::vector<std::vector<Vertex>>& half_sets, int class_count,
    const Graph& h, const Decomposition& decomp, const CandidateAssignment& assignment,
    const std::vector<Vertex>& pre_embedded, int min_candidates, long node_budget = 0);

}  // namespace ramsey
