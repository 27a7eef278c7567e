#include "ramsey/pattern_embed.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

struct PatternEmbedder {
  const Graph& host;
  const Graph& pattern;
  std::vector<Vertex> order;      // pattern vertices, connectivity-first
  std::vector<Vertex> image;
  std::vector<char> occupied;
  std::vector<std::vector<Vertex>> host_adj_filtered;  // colour-filtered adjacency
  const PatternEmbedOptions& options;
  long explored = 0;

  bool over_budget() const {
    return options.node_budget > 0 && explored >= options.node_budget;
  }

  bool feasible(Vertex pv, Vertex hv) {
    if (occupied[hv]) return false;
    if (options.allowed_hosts) {
      // allowed mask precomputed into occupied complement by caller
    }
    if (options.candidates) {
      const auto& cand = (*options.candidates)[pv];
      if (!cand.empty() && std::find(cand.begin(), cand.end(), hv) == cand.end())
        return false;
    }
    // All already-embedded pattern neighbours must be host-adjacent to hv.
    for (Vertex pw : pattern.neighbors(pv)) {
      Vertex hw = image[pw];
      if (hw < 0) continue;
      const auto& adj = host_adj_filtered[hv];
      if (!std::binary_search(adj.begin(), adj.end(), hw)) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    if (idx == order.size()) return true;
    if (over_budget()) return false;
    Vertex pv = order[idx];
    // Candidate pool: neighbours of an embedded pattern-neighbour when one
    // exists (connectivity order makes this the common case), else all hosts.
    std::vector<Vertex> pool;
    Vertex anchor = -1;
    for (Vertex pw : pattern.neighbors(pv))
      if (image[pw] >= 0) {
        anchor = image[pw];
        break;
      }
    if (anchor >= 0) {
      pool.assign(host_adj_filtered[anchor].begin(), host_adj_filtered[anchor].end());
    } else {
      pool.resize(host.vertex_count());
      std::iota(pool.begin(), pool.end(), 0);
    }
    for (Vertex hv : pool) {
      if (!feasible(pv, hv)) continue;
      ++explored;
      image[pv] = hv;
      occupied[hv] = 1;
      if (place(idx + 1)) return true;
      occupied[hv] = 0;
      image[pv] = -1;
      if (over_budget()) return false;
    }
    return false;
  }
};

}  // namespace

PatternEmbedResult embed_pattern(const Graph& host, const Graph& pattern,
                                 const std::optional<TwoColoring>& colouring,
                                 std::optional<Colour> colour,
                                 const PatternEmbedOptions& options) {
  PatternEmbedResult result;
  if (pattern.vertex_count() == 0) {
    result.success = true;
    result.map.pattern = share(pattern);
    return result;
  }
  if (pattern.vertex_count() > host.vertex_count()) {
    fail(ErrorCode::pattern_too_large,
         "pattern-too-large: " + std::to_string(pattern.vertex_count()) + " > " +
             std::to_string(host.vertex_count()));
  }

  // Colour-filtered sorted adjacency.
  std::vector<std::vector<Vertex>> adj(host.vertex_count());
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    const auto& [u, v] = host.edges()[i];
    if (colouring.has_value() && colour.has_value() &&
        colouring->colour_of_index(i) != *colour)
      continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Order: highest-degree start, then BFS through the pattern so every later
  // vertex has an embedded neighbour when the pattern is connected.
  std::vector<Vertex> order;
  std::vector<char> queued(pattern.vertex_count(), 0);
  std::vector<Vertex> by_degree(pattern.vertex_count());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
    return pattern.degree(a) > pattern.degree(b) || (pattern.degree(a) == pattern.degree(b) && a < b);
  });
  for (Vertex seed : by_degree) {
    if (queued[seed]) continue;
    std::vector<Vertex> frontier{seed};
    queued[seed] = 1;
    std::size_t head = order.size();
    order.push_back(seed);
    while (head < order.size()) {
      Vertex v = order[head++];
      for (Vertex w : pattern.neighbors(v))
        if (!queued[w]) {
          queued[w] = 1;
          order.push_back(w);
        }
    }
    (void)frontier;
  }

  std::vector<char> occupied(host.vertex_count(), 0);
  if (options.allowed_hosts) {
    std::vector<char> allowed(host.vertex_count(), 0);
    for (Vertex v : *options.allowed_hosts) allowed[v] = 1;
    for (Vertex v = 0; v < host.vertex_count(); ++v)
      if (!allowed[v]) occupied[v] = 1;  // pre-block disallowed hosts
  }

  PatternEmbedder embedder{host,
                           pattern,
                           std::move(order),
                           std::vector<Vertex>(pattern.vertex_count(), -1),
                           std::move(occupied),
                           std::move(adj),
                           options};
  result.success = embedder.place(0);
  result.nodes_explored = embedder.explored;
  result.exhausted =
      !result.success && (options.node_budget == 0 || embedder.explored < options.node_budget);
  if (result.success) {
    result.map.pattern = share(pattern);
    result.map.image = std::move(embedder.image);
  }
  return result;
}

}  // namespace ramsey
