#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/designs.hpp"
#include "ramsey/matchings.hpp"
#include "ramsey/models.hpp"
#include "ramsey/params.hpp"

namespace ramsey {

// Provenance tag for a host edge: the base graph and/or layer indices.
struct EdgeProvenance {
  bool in_base = false;
  std::vector<int> layer_indices;  // layers whose A'_i contains the edge
};

// The assembled host: base block-model graph G, the matchings, the layer
// family, and their union Gamma, with provenance for every union edge.
struct LayeredHost {
  ParameterSet params;
  std::uint64_t seed = 0;
  BlockDesign design;
  Graph base;                      // G
  std::vector<int> present_blocks;
  MatchingCollection matchings;
  LayerSet layers;
  Graph gamma;                     // G u A'_1 u ... u A'_z

  // Aligned with gamma.edges().
  std::vector<EdgeProvenance> provenance;

  EdgeProvenance provenance_of(Vertex u, Vertex v) const;
};

// Full pipeline: design, block model, matchings, layers, union. Deterministic
// for a fixed seed. When z_override >= 0 only that many matchings are kept
// (0 gives Gamma = G).
LayeredHost assemble_host(const ParameterSet& params, std::uint64_t seed,
                          int z_override = -1);

struct HostEdgeBudget {
  std::size_t base_edges = 0;
  std::size_t layer_edges_total = 0;  // sum over A'_i
  std::size_t gamma_edges = 0;
  double base_threshold = 0.0;   // (1 + gamma) C(n,2) p
  double gamma_threshold = 0.0;  // n^{3/2 + 2 delta}
  bool base_within = false;      // informational at desk scale
  bool gamma_within = false;
};

HostEdgeBudget host_edge_budget_report(const LayeredHost& host);

// Writes a bundle directory: parameter file, design JSON, graph files for G,
// each A'_i and Gamma, matchings JSON, and a manifest with seed and content
// hashes. Returns the manifest text.
std::string write_host_bundle(const LayeredHost& host, const std::string& directory);

}  // namespace ramsey
