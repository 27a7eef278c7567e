#pragma once

#include <optional>
#include <vector>

#include "ramsey/embedding_map.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

struct TreeEmbedResult {
  bool success = false;
  EmbeddingMap map;          // valid when success
  bool exhausted = false;    // the search ran to completion without success
  long nodes_explored = 0;
};

// Greedy leaf-extension with full backtracking: tree vertices in BFS order,
// each mapped to an unoccupied host neighbour of its parent's image.
// node_budget 0 means unlimited (complete search). Success is guaranteed when
// the host passes an exact expansion_check(2|t|-2, d+1); elsewhere this is
// best effort and a failure is a report, not an error.
TreeEmbedResult embed_tree_fp(const Graph& host, const RootedTree& tree, int degree_bound,
                              long node_budget = 0,
                              const std::vector<Vertex>* allowed_hosts = nullptr);

}  // namespace ramsey
