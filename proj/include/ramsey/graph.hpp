#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

// Immutable simple undirected graph. Construction validates the invariants
// (no loops, no duplicates, endpoints in range); afterwards all queries are
// const and safe to use from concurrent workers.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::vector<Edge> edges);

  static Graph empty(Vertex n) { return Graph(n, {}); }
  static Graph complete(Vertex n);
  static Graph cycle(Vertex n);
  static Graph path(Vertex n);
  static Graph complete_bipartite(Vertex a, Vertex b);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  Vertex max_degree() const;

  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

  // Index of edge {u,v} in edges(), or -1 when absent.
  std::int64_t edge_index(Vertex u, Vertex v) const;

  // BFS distances from source; -1 for unreachable vertices.
  std::vector<Vertex> bfs_distances(Vertex source) const;

  std::vector<std::vector<Vertex>> connected_components() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;          // sorted lexicographically
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> adj_;          // sorted per vertex
  std::vector<std::int64_t> adj_edge_index_;  // aligned with adj_
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Graph with an edge uv exactly when 1 <= dist_g(u,v) <= k.
Graph graph_power(const Graph& g, int k);

enum class BlowUpKind { independent, clique };

// Vertex v of the base expands to the class {v*t, ..., v*t + t - 1}.
struct BlowUp {
  Graph graph;
  int class_size = 1;
  Vertex base_vertex_count = 0;

  Vertex class_of(Vertex blown) const { return blown / class_size; }
  std::vector<Vertex> vertex_class(Vertex base) const {
    std::vector<Vertex> cls(class_size);
    for (int i = 0; i < class_size; ++i) cls[i] = base * class_size + i;
    return cls;
  }
};

// Replaces each vertex by a class of size t. Classes are independent sets or
// cliques; base edges become complete bipartite graphs between the classes.
// With clique classes this is the strong product with K_t.
BlowUp blow_up(const Graph& g, int t, BlowUpKind kind);

}  // namespace ramsey
