#include "ramsey/tree.hpp"

#include <algorithm>
#include <queue>

namespace ramsey {

RootedTree RootedTree::from_parents(Vertex root, std::vector<std::optional<Vertex>> parents) {
  RootedTree t;
  t.root = root;
  t.parent = std::move(parents);
  Vertex n = t.vertex_count();
  require(root >= 0 && root < n, ErrorCode::invalid_argument, "root out of range");
  require(!t.parent[root].has_value(), ErrorCode::invalid_argument, "root has a parent");
  int rootless = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!t.parent[v].has_value()) {
      ++rootless;
      continue;
    }
    Vertex p = *t.parent[v];
    require(p >= 0 && p < n && p != v, ErrorCode::invalid_argument, "bad parent");
  }
  require(rootless == 1, ErrorCode::invalid_argument, "exactly one root required");
  // Acyclicity and connectivity: every vertex must reach the root.
  for (Vertex v = 0; v < n; ++v) {
    Vertex cur = v;
    Vertex steps = 0;
    while (t.parent[cur].has_value()) {
      cur = *t.parent[cur];
      require(++steps <= n, ErrorCode::invalid_argument, "parent map has a cycle");
    }
    require(cur == root, ErrorCode::invalid_argument, "disconnected parent map");
  }
  return t;
}

RootedTree RootedTree::path(Vertex n) {
  require(n >= 1, ErrorCode::invalid_argument, "empty path");
  std::vector<std::optional<Vertex>> parents(n);
  for (Vertex v = 1; v < n; ++v) parents[v] = v - 1;
  return from_parents(0, std::move(parents));
}

RootedTree RootedTree::star(Vertex leaves) {
  std::vector<std::optional<Vertex>> parents(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) parents[v] = 0;
  return from_parents(0, std::move(parents));
}

std::vector<std::vector<Vertex>> RootedTree::children() const {
  std::vector<std::vector<Vertex>> ch(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (parent[v].has_value()) ch[*parent[v]].push_back(v);
  return ch;
}

std::vector<Vertex> RootedTree::depths() const {
  std::vector<Vertex> d(vertex_count(), -1);
  for (Vertex v : bfs_order())
    d[v] = parent[v].has_value() ? d[*parent[v]] + 1 : 0;
  return d;
}

Vertex RootedTree::depth() const {
  Vertex best = 0;
  for (Vertex d : depths()) best = std::max(best, d);
  return best;
}

Vertex RootedTree::degree(Vertex v) const {
  Vertex deg = parent[v].has_value() ? 1 : 0;
  for (Vertex w = 0; w < vertex_count(); ++w)
    if (parent[w].has_value() && *parent[w] == v) ++deg;
  return deg;
}

Vertex RootedTree::max_degree() const {
  std::vector<Vertex> deg(vertex_count(), 0);
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (parent[v].has_value()) {
      ++deg[v];
      ++deg[*parent[v]];
    }
  Vertex best = 0;
  for (Vertex d : deg) best = std::max(best, d);
  return best;
}

Graph RootedTree::as_graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (parent[v].has_value()) edges.push_back({std::min(v, *parent[v]), std::max(v, *parent[v])});
  return Graph(vertex_count(), std::move(edges));
}

std::vector<Vertex> RootedTree::bfs_order() const {
  auto ch = children();
  std::vector<Vertex> order;
  order.reserve(vertex_count());
  std::queue<Vertex> queue;
  queue.push(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    order.push_back(v);
    for (Vertex w : ch[v]) queue.push(w);
  }
  require(static_cast<Vertex>(order.size()) == vertex_count(), ErrorCode::internal,
          "tree traversal missed vertices");
  return order;
}

RootedTree truncate_tree(const RootedTree& t, std::vector<Vertex>* kept_map) {
  auto depth = t.depths();
  Vertex n = t.vertex_count();
  std::vector<bool> keep(n);
  for (Vertex v = 0; v < n; ++v) keep[v] = (depth[v] == 0) || (depth[v] % 2 == 1);

  // New parent: for kept v at depth 1 the root; at odd depth >= 3 the
  // grandparent (its parent is removed, so v re-attaches one level up).
  std::vector<Vertex> relabel(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (keep[v]) relabel[v] = next++;
  std::vector<std::optional<Vertex>> parents(next);
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v] || v == t.root) continue;
    Vertex p = *t.parent[v];
    if (depth[v] >= 3) p = *t.parent[p];
    parents[relabel[v]] = relabel[p];
  }
  if (kept_map != nullptr) *kept_map = relabel;
  return RootedTree::from_parents(relabel[t.root], std::move(parents));
}

}  // namespace ramsey
