#pragma once

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/embedding_map.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct PatternEmbedOptions {
  long node_budget = 0;  // 0 = unlimited (complete search)
  const std::vector<Vertex>* allowed_hosts = nullptr;
  // Per pattern-vertex candidate sets; empty inner vector = unconstrained.
  const std::vector<std::vector<Vertex>>* candidates = nullptr;
};

struct PatternEmbedResult {
  bool success = false;
  EmbeddingMap map;
  bool exhausted = false;
  long nodes_explored = 0;
};

// Backtracking subgraph embedding (not induced), most-constrained-first with
// forward degree pruning. When a colouring and colour are given, only host
// edges of that colour count.
PatternEmbedResult embed_pattern(const Graph& host, const Graph& pattern,
                                 const std::optional<TwoColoring>& colouring = std::nullopt,
                                 std::optional<Colour> colour = std::nullopt,
                                 const PatternEmbedOptions& options = {});

}  // namespace ramsey
