#include "ramsey/tree_embed.hpp"

#include <algorithm>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

struct TreeEmbedder {
  const Graph& host;
  const std::vector<Vertex>& order;           // tree vertices, BFS order
  const std::vector<std::optional<Vertex>>& parent;
  std::vector<Vertex> image;                  // tree vertex -> host vertex
  std::vector<char> occupied;
  const std::vector<char>* allowed;
  long budget;  // < 0 means unlimited
  long explored = 0;

  bool place(std::size_t idx) {
    if (idx == order.size()) return true;
    if (budget >= 0 && explored >= budget) return false;
    Vertex t = order[idx];
    if (!parent[t].has_value()) {
      // A root: try every host vertex (components beyond the first as well).
      for (Vertex h = 0; h < host.vertex_count(); ++h) {
        if (occupied[h] || (allowed && !(*allowed)[h])) continue;
        ++explored;
        image[t] = h;
        occupied[h] = 1;
        if (place(idx + 1)) return true;
        occupied[h] = 0;
        if (budget >= 0 && explored >= budget) return false;
      }
      return false;
    }
    Vertex anchor = image[*parent[t]];
    for (Vertex h : host.neighbors(anchor)) {
      if (occupied[h] || (allowed && !(*allowed)[h])) continue;
      ++explored;
      image[t] = h;
      occupied[h] = 1;
      if (place(idx + 1)) return true;
      occupied[h] = 0;
      if (budget >= 0 && explored >= budget) return false;
    }
    return false;
  }
};

}  // namespace

TreeEmbedResult embed_tree_fp(const Graph& host, const RootedTree& tree, int degree_bound,
                              long node_budget, const std::vector<Vertex>* allowed_hosts) {
  require(host.vertex_count() > 0, ErrorCode::invalid_argument, "host is empty");
  require(tree.max_degree() <= degree_bound, ErrorCode::invalid_argument,
          "tree degree exceeds the stated bound");
  std::size_t allowed_count = allowed_hosts ? allowed_hosts->size()
                                            : static_cast<std::size_t>(host.vertex_count());
  if (static_cast<std::size_t>(tree.vertex_count()) > allowed_count)
    fail(ErrorCode::pattern_too_large,
         "pattern-too-large: tree has " + std::to_string(tree.vertex_count()) +
             " vertices, host offers " + std::to_string(allowed_count));

  auto order = tree.bfs_order();
  TreeEmbedResult result;
  std::vector<char> allowed_mask;
  const std::vector<char>* allowed_ptr = nullptr;
  if (allowed_hosts) {
    allowed_mask.assign(host.vertex_count(), 0);
    for (Vertex v : *allowed_hosts) allowed_mask[v] = 1;
    allowed_ptr = &allowed_mask;
  }
  TreeEmbedder embedder{host,
                        order,
                        tree.parent,
                        std::vector<Vertex>(tree.vertex_count(), -1),
                        std::vector<char>(host.vertex_count(), 0),
                        allowed_ptr,
                        node_budget == 0 ? -1 : node_budget};
  result.success = embedder.place(0);
  result.nodes_explored = embedder.explored;
  result.exhausted = !result.success && (node_budget == 0 || embedder.explored < node_budget);
  if (result.success) {
    result.map.pattern = share(tree.as_graph());
    result.map.image = std::move(embedder.image);
  }
  return result;
}

}  // namespace ramsey
