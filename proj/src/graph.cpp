#include "ramsey/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace ramsey {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::search_capped: return "search-capped";
    case ErrorCode::no_triple_system: return "no-triple-system";
    case ErrorCode::prime_required: return "prime-required";
    case ErrorCode::parameter_infeasible: return "parameter-infeasible";
    case ErrorCode::block_too_large: return "block-too-large";
    case ErrorCode::degree_exceeded: return "degree-exceeded";
    case ErrorCode::pattern_too_large: return "pattern-too-large";
    case ErrorCode::empty_part: return "empty-part";
    case ErrorCode::cleanup_collapsed: return "cleanup-collapsed";
    case ErrorCode::witness_incomplete: return "witness-incomplete";
    case ErrorCode::container_bounds_exceeded: return "container-bounds-exceeded";
    case ErrorCode::io_failure: return "io-failure";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  require(n >= 0, ErrorCode::invalid_argument, "negative vertex count");
  for (auto& [u, v] : edges_) {
    require(u != v, ErrorCode::invalid_argument, "self-loop");
    if (u > v) std::swap(u, v);
    require(u >= 0 && v < n_, ErrorCode::invalid_argument, "endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  require(dup == edges_.end(), ErrorCode::invalid_argument, "duplicate edge");

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adj_.resize(edges_.size() * 2);
  adj_edge_index_.resize(edges_.size() * 2);
  std::vector<std::int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    adj_[cursor[u]] = v;
    adj_edge_index_[cursor[u]++] = static_cast<std::int64_t>(i);
    adj_[cursor[v]] = u;
    adj_edge_index_[cursor[v]++] = static_cast<std::int64_t>(i);
  }
  // Edges were added in sorted order, and per-vertex entries inherit it for
  // the forward direction only; sort each neighbourhood with its indices.
  for (Vertex v = 0; v < n_; ++v) {
    auto begin = offsets_[v], end = offsets_[v + 1];
    std::vector<std::pair<Vertex, std::int64_t>> tmp;
    tmp.reserve(end - begin);
    for (auto i = begin; i < end; ++i) tmp.emplace_back(adj_[i], adj_edge_index_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (auto i = begin; i < end; ++i) {
      adj_[i] = tmp[i - begin].first;
      adj_edge_index_[i] = tmp[i - begin].second;
    }
  }
}

Graph Graph::complete(Vertex n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(Vertex n) {
  require(n >= 3, ErrorCode::invalid_argument, "cycle needs >= 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph Graph::path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<Vertex>(v + 1)});
  return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  return Graph(a + b, std::move(edges));
}

Vertex Graph::max_degree() const {
  Vertex best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::int64_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto begin = adj_.begin() + offsets_[u];
  auto end = adj_.begin() + offsets_[u + 1];
  auto it = std::lower_bound(begin, end, v);
  if (it == end || *it != v) return -1;
  return adj_edge_index_[it - adj_.begin()];
}

std::vector<Vertex> Graph::bfs_distances(Vertex source) const {
  std::vector<Vertex> dist(n_, -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> Graph::connected_components() const {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(n_, false);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (Vertex w : neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph graph_power(const Graph& g, int k) {
  require(k >= 1, ErrorCode::invalid_argument, "graph power needs k >= 1");
  if (k == 1) return g;
  std::vector<Edge> edges;
  // BFS from each vertex, truncated at depth k.
  std::vector<Vertex> dist(g.vertex_count(), -1);
  std::vector<Vertex> touched;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    touched.clear();
    dist[s] = 0;
    touched.push_back(s);
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (dist[v] == k) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          touched.push_back(w);
          if (w > s) edges.push_back({s, w});
          if (dist[w] < k) queue.push(w);
        }
      }
    }
    for (Vertex v : touched) dist[v] = -1;
  }
  return Graph(g.vertex_count(), std::move(edges));
}

BlowUp blow_up(const Graph& g, int t, BlowUpKind kind) {
  require(t >= 1, ErrorCode::invalid_argument, "blow-up needs t >= 1");
  std::vector<Edge> edges;
  if (kind == BlowUpKind::clique) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
          edges.push_back({static_cast<Vertex>(v * t + i), static_cast<Vertex>(v * t + j)});
  }
  for (const auto& [u, v] : g.edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        edges.push_back({static_cast<Vertex>(u * t + i), static_cast<Vertex>(v * t + j)});
  BlowUp result;
  result.graph = Graph(g.vertex_count() * t, std::move(edges));
  result.class_size = t;
  result.base_vertex_count = g.vertex_count();
  return result;
}

}  // namespace ramsey
