#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// An injective map from a pattern graph into a host, with every pattern edge
// landing on a host edge (of the required colour when one is imposed).
struct EmbeddingMap {
  GraphPtr pattern;
  std::vector<Vertex> image;  // indexed by pattern vertex
};

struct EmbeddingViolation {
  std::string kind;  // "range", "injectivity", "missing-edge", "wrong-colour", "candidate"
  Vertex pattern_u = -1;
  Vertex pattern_v = -1;
};

// Independent re-validation of an embedding. Deliberately checks straight from
// the definitions (edge-by-edge against the host) and shares no state with any
// of the search routines.
std::vector<EmbeddingViolation> validate_embedding(
    const EmbeddingMap& map, const Graph& host,
    const std::optional<TwoColoring>& colouring = std::nullopt,
    std::optional<Colour> required_colour = std::nullopt,
    const std::vector<std::vector<Vertex>>* candidate_sets = nullptr);

inline bool embedding_valid(const EmbeddingMap& map, const Graph& host,
                            const std::optional<TwoColoring>& colouring = std::nullopt,
                            std::optional<Colour> required_colour = std::nullopt) {
  return validate_embedding(map, host, colouring, required_colour).empty();
}

}  // namespace ramsey
