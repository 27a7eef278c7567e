#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Ordered decomposition of a max-degree-3 graph: a remainder J with no long
// induced cycles, then the removed induced cycles F_1..F_g in removal order.
// The partition order (J, F_1, ..., F_g) is 1-degenerate.
struct Decomposition {
  std::vector<Vertex> j_set;                 // sorted
  std::vector<std::vector<Vertex>> cycles;   // cyclic vertex sequences
};

// Repeatedly removes the shortest induced cycle of length >= ell until none
// remains. Throws degree-exceeded when max degree is above 3.
Decomposition decompose_cubic(const Graph& h, int ell);

struct DecompositionReport {
  bool partition_exact = false;
  std::vector<int> non_cycle_parts;        // F_i that fail the induced-cycle check
  bool j_has_long_induced_cycle = false;   // exhaustive check inside J
  std::vector<Vertex> back_degree_violations;  // vertices with back-degree > 1
  int treewidth_bound = 0;  // (ell-1)(max_degree-1)+2 for the remainder
  bool valid() const {
    return partition_exact && non_cycle_parts.empty() && !j_has_long_induced_cycle &&
           back_degree_violations.empty();
  }
};

DecompositionReport validate_decomposition(const Graph& h, const Decomposition& d, int ell);

}  // namespace ramsey
