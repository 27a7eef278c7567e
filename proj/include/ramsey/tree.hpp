#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Rooted tree stored as a parent map; vertex ids are 0..n-1 and exactly one
// vertex (the root) has no parent.
struct RootedTree {
  Vertex root = 0;
  std::vector<std::optional<Vertex>> parent;  // parent[root] is empty

  Vertex vertex_count() const { return static_cast<Vertex>(parent.size()); }

  static RootedTree from_parents(Vertex root, std::vector<std::optional<Vertex>> parents);
  static RootedTree path(Vertex n);  // rooted at endpoint 0
  static RootedTree star(Vertex leaves);  // rooted at the centre

  std::vector<std::vector<Vertex>> children() const;
  std::vector<Vertex> depths() const;
  Vertex depth() const;
  Vertex degree(Vertex v) const;
  Vertex max_degree() const;
  Graph as_graph() const;

  // BFS order from the root; parents precede children.
  std::vector<Vertex> bfs_order() const;
};

// Removes every vertex at positive even depth and re-attaches its children to
// its parent. Keeps the max degree below the square of the input max degree
// and roughly halves the depth. When kept_map is given it receives, per input
// vertex, the output id (or -1 for removed vertices).
RootedTree truncate_tree(const RootedTree& t, std::vector<Vertex>* kept_map = nullptr);

}  // namespace ramsey
