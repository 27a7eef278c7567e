#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/models.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// One family member: a C'-subset of (block n S), remembering its block.
struct DensifierPart {
  std::vector<Vertex> vertices;
  int block_index = -1;
};

struct Densifier {
  std::vector<std::vector<DensifierPart>> families;  // W_1..W_q
  int part_size = 0;  // C'
  double gamma = 0.0;
  int s = 0;
  int q = 0;
};

struct DensifierCheck {
  bool valid = false;
  std::vector<std::string> violations;
};

// Validates every clause of the densifier definition against a layer: part
// sizes and block membership inside S, disjointness across all families, the
// family count and size floor, and absence of a blue K_{s,s} between parts of
// different families wherever the covering biclique exists in the layer.
DensifierCheck validate_densifier(const Densifier& candidate, const Graph& layer,
                                  const TwoColoring& colouring,
                                  const std::vector<Vertex>& s_set,
                                  const SearchLimits& limits = {});

// Validates a supplied candidate, or searches directly at tiny scale
// (q <= 3, parts per family <= 4) by exhaustive family assignment. Beyond
// tiny scale with no candidate, throws search-capped.
std::optional<Densifier> detect_densifier(const LayerSet& layers, int layer_index,
                                          const TwoColoring& colouring,
                                          const std::vector<Vertex>& s_set, int c_prime,
                                          double gamma, int s, int q,
                                          const std::optional<Densifier>& candidate,
                                          const SearchLimits& limits = {});

}  // namespace ramsey
