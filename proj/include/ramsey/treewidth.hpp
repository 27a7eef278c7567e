#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;  // bag indices
  int width = -1;
  bool exact = false;  // minimum width certified by the exact solver

  bool valid_for(const Graph& g) const;
};

// Exact minimum-width decomposition for n <= exact_cap via branch and bound
// over elimination orders (memoised, seeded with the min-fill upper bound);
// min-fill heuristic above the cap. Validity is always checked. A best width
// above width_cap is reported in the result, not thrown.
struct TreeDecompositionResult {
  TreeDecomposition decomposition;
  bool width_cap_exceeded = false;
};

TreeDecompositionResult tree_decomposition_small(const Graph& g, int width_cap,
                                                 int exact_cap = 40);

// Container for a low-treewidth bounded-degree graph inside a blow-up of a
// tree: an injective homomorphism of g into T boxtimes K_k.
struct TreeBlowupContainer {
  RootedTree tree;
  int class_size = 0;  // k
  // vertex v of g maps to (tree node slot_node[v], class slot slot_index[v]).
  std::vector<Vertex> slot_node;
  std::vector<int> slot_index;
  Vertex tree_max_degree = 0;
};

// Builds a tree partition of g (BFS layer components, parents merged until
// unique) and reads the container off it. Validates the injective
// homomorphism edge by edge and the bounds k <= 18 w d and
// max degree(T) <= 18 w d^2; exceeding them raises container-bounds-exceeded
// with the achieved values in the message.
TreeBlowupContainer build_tree_blowup_container(const Graph& g,
                                                const TreeDecomposition& tdecomp,
                                                int d_max);

}  // namespace ramsey
