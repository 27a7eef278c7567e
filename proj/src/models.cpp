#include "ramsey/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

Graph sample_gnp(Vertex n, double p, const SplitRng& rng) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::invalid_argument, "p outside [0,1]");
  SplitRng stream = rng.fork(SplitRng::kGnp);
  std::vector<Edge> edges;
  if (p > 0.0) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (stream.next_bernoulli(p)) edges.push_back({u, v});
  } else {
    // Still consume no draws: p == 0 yields the empty graph for every seed.
  }
  return Graph(n, std::move(edges));
}

Graph sample_random_cubic(Vertex n, const SplitRng& rng) {
  require(n >= 4 && n % 2 == 0, ErrorCode::invalid_argument,
          "cubic graphs need an even vertex count >= 4");
  SplitRng stream = rng.fork(SplitRng::kGnp, 0xcb1c);
  std::vector<int> stubs(3 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i / 3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (std::size_t i = 0; i + 1 < stubs.size(); ++i)
      std::swap(stubs[i], stubs[i + stream.next_below(stubs.size() - i)]);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      Vertex u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  fail(ErrorCode::internal, "pairing model failed to produce a simple cubic graph");
}

BlockModelSample sample_block_model(const BlockDesign& d, double p, const SplitRng& rng) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::invalid_argument, "p outside [0,1]");
  BlockModelSample sample;
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    SplitRng stream = rng.fork(SplitRng::kBlockPresence, b);
    if (!stream.next_bernoulli(p)) continue;
    sample.present_blocks.push_back(static_cast<int>(b));
    const auto& block = d.blocks[b];
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        edges.push_back({std::min(block[i], block[j]), std::max(block[i], block[j])});
  }
  sample.graph = Graph(d.n, std::move(edges));
  return sample;
}

std::vector<int> sample_conditional_nonempty_subset(int m, double q, SplitRng& rng,
                                                    int max_exact_edges) {
  require(m >= 1, ErrorCode::invalid_argument, "unit needs at least one edge");
  require(q > 0.0 && q <= 1.0, ErrorCode::invalid_argument, "q outside (0,1]");
  std::vector<int> chosen;
  if (m > max_exact_edges) {
    // Rejection: draw m independent q-coins, redraw while all come up empty.
    for (;;) {
      chosen.clear();
      for (int i = 0; i < m; ++i)
        if (rng.next_bernoulli(q)) chosen.push_back(i);
      if (!chosen.empty()) return chosen;
    }
  }
  // Exact path. Conditioned on being non-empty the law is exchangeable, so
  // draw the size k by inverse CDF over P[k] ~ C(m,k) q^k (1-q)^{m-k} for
  // k >= 1, then a uniform k-subset.
  double target = rng.next_double();
  double p_unit = -std::expm1(static_cast<double>(m) * std::log1p(-q));
  // pmf(k)/pmf(k-1) = (m-k+1)/k * q/(1-q); start from pmf(1).
  double pmf = static_cast<double>(m) * q * std::pow(1.0 - q, m - 1) / p_unit;
  double cdf = pmf;
  int k = 1;
  while (k < m && target > cdf) {
    ++k;
    pmf *= static_cast<double>(m - k + 1) / static_cast<double>(k) * q / (1.0 - q);
    cdf += pmf;
  }
  // Partial Fisher-Yates for a uniform k-subset of {0..m-1}.
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m - i)));
    std::swap(pool[i], pool[j]);
  }
  chosen.assign(pool.begin(), pool.begin() + k);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

std::vector<Edge> block_pairs(const std::vector<Vertex>& block) {
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      pairs.push_back({std::min(block[i], block[j]), std::max(block[i], block[j])});
  return pairs;
}

}  // namespace

Graph subsample_blocks(const Graph& g, const BlockDesign& d,
                       const std::vector<int>& present_blocks, double p, double p_tilde,
                       const SplitRng& rng) {
  int edges_per_block = d.block_size * (d.block_size - 1) / 2;
  if (edges_per_block > 15)
    fail(ErrorCode::block_too_large,
         "block-too-large: C(C,2) = " + std::to_string(edges_per_block) +
             " exceeds the exact enumeration cap");
  require(p > 0.0, ErrorCode::invalid_argument, "p must be positive");
  std::vector<Edge> edges;
  for (int b : present_blocks) {
    const auto& block = d.blocks[b];
    auto pairs = block_pairs(block);
    for (const auto& e : pairs)
      require(g.has_edge(e.first, e.second), ErrorCode::invalid_argument,
              "present block lacks an edge in g");
    SplitRng stream = rng.fork(SplitRng::kBlockSubsample, static_cast<std::uint64_t>(b));
    auto kept = sample_conditional_nonempty_subset(edges_per_block, p_tilde, stream, 15);
    for (int idx : kept) edges.push_back(pairs[idx]);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

LayerSet build_layers(const BlockDesign& d, const std::vector<std::vector<int>>& matchings,
                      Vertex host_n, double p_prime, const SplitRng& rng) {
  LayerSet layers;
  layers.design = &d;
  layers.matchings = matchings;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    const auto& matching = matchings[i];
    Vertex ni = static_cast<Vertex>(matching.size());
    SplitRng stream = rng.fork(SplitRng::kLayerSkeleton, i);
    Graph skeleton = sample_gnp(ni, p_prime, stream);
    Graph skeleton_cubed = graph_power(skeleton, 3);

    auto lift = [&](const Graph& sk) {
      std::vector<Edge> edges;
      for (const auto& [a, b] : sk.edges()) {
        const auto& block_a = d.blocks[matching[a]];
        const auto& block_b = d.blocks[matching[b]];
        for (Vertex u : block_a)
          for (Vertex v : block_b)
            edges.push_back({std::min(u, v), std::max(u, v)});
      }
      return Graph(host_n, std::move(edges));
    };
    layers.layers.push_back(lift(skeleton));
    layers.layers_cubed.push_back(lift(skeleton_cubed));
    layers.skeletons.push_back(std::move(skeleton));
    layers.block_of.push_back(matching);
  }
  return layers;
}

std::vector<Graph> subsample_layers(const LayerSet& layers, double p_prime,
                                    double p_tilde_prime, const SplitRng& rng,
                                    int max_exact_edges) {
  require(p_prime > 0.0, ErrorCode::invalid_argument, "p' must be positive");
  const BlockDesign& d = *layers.design;
  int edges_per_biclique = d.block_size * d.block_size;
  std::vector<Graph> result;
  for (std::size_t i = 0; i < layers.skeletons.size(); ++i) {
    const Graph& skeleton = layers.skeletons[i];
    const auto& matching = layers.matchings[i];
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < skeleton.edge_count(); ++e) {
      auto [a, b] = skeleton.edges()[e];
      SplitRng stream = rng.fork(SplitRng::kBicliqueSubsample,
                                 (static_cast<std::uint64_t>(i) << 40) ^ e);
      auto kept = sample_conditional_nonempty_subset(edges_per_biclique, p_tilde_prime,
                                                     stream, max_exact_edges);
      const auto& block_a = d.blocks[matching[a]];
      const auto& block_b = d.blocks[matching[b]];
      for (int idx : kept) {
        Vertex u = block_a[idx / d.block_size];
        Vertex v = block_b[idx % d.block_size];
        edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
    result.push_back(Graph(layers.layers[i].vertex_count(), std::move(edges)));
  }
  return result;
}

CouplingSample couple_layers_into_gnp(const BlockDesign& d,
                                      const std::vector<std::vector<int>>& matchings,
                                      Vertex host_n, double p_tilde_prime,
                                      const SplitRng& rng) {
  CouplingSample sample;
  std::vector<Edge> full_edges;
  std::vector<Edge> restricted_edges;
  // block_at[v] = index of the matching block covering v, refreshed per layer.
  std::vector<int> block_at(host_n);
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    SplitRng stream = rng.fork(SplitRng::kCoupling, i);
    Graph fi = sample_gnp(host_n, p_tilde_prime, stream);
    std::fill(block_at.begin(), block_at.end(), -1);
    for (int b : matchings[i])
      for (Vertex v : d.blocks[b]) block_at[v] = b;
    for (const auto& e : fi.edges()) {
      full_edges.push_back(e);
      int ba = block_at[e.first], bb = block_at[e.second];
      if (ba >= 0 && bb >= 0 && ba != bb) restricted_edges.push_back(e);
    }
  }
  auto dedupe = [host_n](std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(host_n, std::move(edges));
  };
  sample.full = dedupe(std::move(full_edges));
  sample.restricted = dedupe(std::move(restricted_edges));
  sample.contained = true;
  for (const auto& [u, v] : sample.restricted.edges())
    sample.contained = sample.contained && sample.full.has_edge(u, v);
  return sample;
}

}  // namespace ramsey
