#include "ramsey/decomposition.hpp"

#include <algorithm>

#include "ramsey/error.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep,
                       std::vector<Vertex>& original_ids) {
  original_ids = keep;
  std::vector<Vertex> relabel(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (relabel[u] >= 0 && relabel[v] >= 0) edges.push_back({relabel[u], relabel[v]});
  return Graph(static_cast<Vertex>(keep.size()), std::move(edges));
}

}  // namespace

Decomposition decompose_cubic(const Graph& h, int ell) {
  require(ell >= 5, ErrorCode::invalid_argument, "decomposition needs ell >= 5");
  if (h.max_degree() > 3)
    fail(ErrorCode::degree_exceeded,
         "degree-exceeded: decomposition requires max degree 3, got " +
             std::to_string(h.max_degree()));
  Decomposition result;
  std::vector<Vertex> alive(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) alive[v] = v;

  for (;;) {
    std::vector<Vertex> ids;
    Graph current = induced_subgraph(h, alive, ids);
    auto cycle = find_induced_cycle(current, ell);
    if (!cycle.has_value()) break;
    std::vector<Vertex> original;
    original.reserve(cycle->size());
    for (Vertex v : *cycle) original.push_back(ids[v]);
    std::vector<char> removed(h.vertex_count(), 0);
    for (Vertex v : original) removed[v] = 1;
    std::vector<Vertex> next_alive;
    for (Vertex v : alive)
      if (!removed[v]) next_alive.push_back(v);
    alive = std::move(next_alive);
    result.cycles.push_back(std::move(original));
  }
  result.j_set = std::move(alive);
  return result;
}

DecompositionReport validate_decomposition(const Graph& h, const Decomposition& d, int ell) {
  DecompositionReport report;

  // Partition exactness.
  std::vector<int> part_of(h.vertex_count(), -1);  // 0 = J, i >= 1 = cycle i-1
  bool exact = true;
  auto claim = [&](Vertex v, int part) {
    if (v < 0 || v >= h.vertex_count() || part_of[v] != -1) {
      exact = false;
      return;
    }
    part_of[v] = part;
  };
  for (Vertex v : d.j_set) claim(v, 0);
  for (std::size_t i = 0; i < d.cycles.size(); ++i)
    for (Vertex v : d.cycles[i]) claim(v, static_cast<int>(i) + 1);
  for (Vertex v = 0; v < h.vertex_count(); ++v) exact = exact && part_of[v] != -1;
  report.partition_exact = exact;
  if (!exact) return report;

  // Each F_i must induce exactly its cycle in h.
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    const auto& cyc = d.cycles[i];
    bool good = static_cast<int>(cyc.size()) >= ell;
    for (std::size_t a = 0; a < cyc.size() && good; ++a)
      for (std::size_t b = a + 1; b < cyc.size(); ++b) {
        bool consecutive = (b == a + 1) || (a == 0 && b == cyc.size() - 1);
        if (h.has_edge(cyc[a], cyc[b]) != consecutive) {
          good = false;
          break;
        }
      }
    if (!good) report.non_cycle_parts.push_back(static_cast<int>(i));
  }

  // J must carry no induced cycle of length >= ell (exhaustive).
  {
    std::vector<Vertex> ids;
    Graph j_graph = induced_subgraph(h, d.j_set, ids);
    report.j_has_long_induced_cycle = find_induced_cycle(j_graph, ell).has_value();
  }

  // Back-degree: each vertex of part i has at most one neighbour in earlier
  // parts, with the order (J, F_1, ..., F_g).
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (part_of[v] == 0) continue;
    int back = 0;
    for (Vertex w : h.neighbors(v))
      if (part_of[w] < part_of[v]) ++back;
    if (back > 1) report.back_degree_violations.push_back(v);
  }

  int max_deg = std::max<Vertex>(1, h.max_degree());
  report.treewidth_bound = (ell - 1) * (max_deg - 1) + 2;
  return report;
}

}  // namespace ramsey
