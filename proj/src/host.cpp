#include "ramsey/host.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>
#include <unordered_map>

#include "ramsey/error.hpp"
#include "ramsey/io.hpp"

namespace ramsey {

EdgeProvenance LayeredHost::provenance_of(Vertex u, Vertex v) const {
  auto idx = gamma.edge_index(u, v);
  require(idx >= 0, ErrorCode::invalid_argument, "provenance query on a non-edge");
  return provenance[static_cast<std::size_t>(idx)];
}

namespace {

BlockDesign design_for(const ParameterSet& params) {
  if (params.C == 3) return steiner_triple(params.n);
  if (static_cast<std::int64_t>(params.C) * params.C == params.n)
    return affine_plane(params.C);
  fail(ErrorCode::invalid_argument,
       "no constructive design for (n, C) = (" + std::to_string(params.n) + ", " +
           std::to_string(params.C) + "); supported: C = 3 with n = 1,3 (mod 6), or "
           "prime C with n = C^2");
}

}  // namespace

LayeredHost assemble_host(const ParameterSet& params, std::uint64_t seed, int z_override) {
  LayeredHost host;
  host.params = params;
  host.seed = seed;
  host.design = design_for(params);
  derive_probabilities(host.params);

  SplitRng rng(seed);
  auto sample = sample_block_model(host.design, host.params.p, rng);
  host.base = std::move(sample.graph);
  host.present_blocks = std::move(sample.present_blocks);

  host.matchings = partition_blocks_into_matchings(host.present_blocks, host.design,
                                                   host.params.eta, /*z_target=*/0,
                                                   host.params.p);
  if (z_override >= 0 && z_override < host.matchings.z()) {
    for (std::size_t m = z_override; m < host.matchings.matchings.size(); ++m)
      for (int b : host.matchings.matchings[m]) host.matchings.leftover_blocks.push_back(b);
    host.matchings.matchings.resize(z_override);
    host.matchings.coverage.resize(z_override);
    std::sort(host.matchings.leftover_blocks.begin(), host.matchings.leftover_blocks.end());
  }
  host.params.z = host.matchings.z();
  derive_probabilities(host.params);  // p'' and p~'' depend on the achieved z

  host.layers = build_layers(host.design, host.matchings.matchings, host.params.n,
                             host.params.p_prime, rng);

  // Union with provenance. Base edges first, then layer edges keyed by hash.
  std::unordered_map<std::uint64_t, std::size_t> index_of;
  std::vector<Edge> edges;
  std::vector<EdgeProvenance> provenance;
  auto slot = [&](Vertex u, Vertex v) {
    auto key = edge_key(u, v);
    auto [it, inserted] = index_of.try_emplace(key, edges.size());
    if (inserted) {
      edges.push_back({std::min(u, v), std::max(u, v)});
      provenance.emplace_back();
    }
    return it->second;
  };
  for (const auto& [u, v] : host.base.edges()) provenance[slot(u, v)].in_base = true;
  for (std::size_t i = 0; i < host.layers.layers_cubed.size(); ++i)
    for (const auto& [u, v] : host.layers.layers_cubed[i].edges())
      provenance[slot(u, v)].layer_indices.push_back(static_cast<int>(i));

  host.gamma = Graph(host.params.n, edges);
  // Graph construction sorts edges; realign provenance by key.
  std::vector<EdgeProvenance> aligned(host.gamma.edge_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto idx = host.gamma.edge_index(edges[i].first, edges[i].second);
    aligned[static_cast<std::size_t>(idx)] = std::move(provenance[i]);
  }
  host.provenance = std::move(aligned);
  return host;
}

HostEdgeBudget host_edge_budget_report(const LayeredHost& host) {
  HostEdgeBudget budget;
  budget.base_edges = host.base.edge_count();
  for (const Graph& a : host.layers.layers_cubed) budget.layer_edges_total += a.edge_count();
  budget.gamma_edges = host.gamma.edge_count();
  double n = static_cast<double>(host.params.n);
  budget.base_threshold =
      (1.0 + host.params.gamma) * n * (n - 1.0) / 2.0 * host.params.p;
  budget.gamma_threshold = std::pow(n, 1.5 + 2.0 * host.params.delta);
  budget.base_within = static_cast<double>(budget.base_edges) <= budget.base_threshold;
  budget.gamma_within = static_cast<double>(budget.gamma_edges) <= budget.gamma_threshold;
  return budget;
}

std::string write_host_bundle(const LayeredHost& host, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  require(!ec, ErrorCode::io_failure, "cannot create " + directory);

  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("params.txt", serialize_parameters(host.params));
  files.emplace_back("design.json", write_design_json(host.design));
  files.emplace_back("matchings.json", write_matchings_json(host.matchings.matchings,
                                                            host.matchings.leftover_blocks));
  std::vector<std::string> provenance_header = {
      "seed " + std::to_string(host.seed),
      "n " + std::to_string(host.params.n) + " C " + std::to_string(host.params.C) +
          " delta " + std::to_string(host.params.delta)};
  files.emplace_back("base.edges", write_edge_list(host.base, provenance_header));
  for (std::size_t i = 0; i < host.layers.layers_cubed.size(); ++i)
    files.emplace_back("layer_cubed_" + std::to_string(i) + ".edges",
                       write_edge_list(host.layers.layers_cubed[i], provenance_header));
  files.emplace_back("gamma.edges", write_edge_list(host.gamma, provenance_header));

  std::ostringstream manifest;
  manifest << "seed " << host.seed << "\n";
  for (const auto& [name, content] : files) {
    spit_file((fs::path(directory) / name).string(), content);
    manifest << content_hash(content) << "  " << name << "\n";
  }
  std::string text = manifest.str();
  spit_file((fs::path(directory) / "manifest.txt").string(), text);
  return text;
}

}  // namespace ramsey
