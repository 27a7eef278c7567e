#include "ramsey/embedding_map.hpp"

#include <algorithm>

namespace ramsey {

TwoColoring::TwoColoring(GraphPtr host, std::vector<Colour> by_edge_index)
    : host_(std::move(host)), colours_(std::move(by_edge_index)) {
  require(host_ != nullptr, ErrorCode::invalid_argument, "colouring needs a host");
  require(colours_.size() == host_->edge_count(), ErrorCode::invalid_argument,
          "colouring must cover the host edge set exactly");
}

std::size_t TwoColoring::count(Colour c) const {
  return static_cast<std::size_t>(std::count(colours_.begin(), colours_.end(), c));
}

Graph TwoColoring::colour_subgraph(Colour c) const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < colours_.size(); ++i)
    if (colours_[i] == c) edges.push_back(host_->edges()[i]);
  return Graph(host_->vertex_count(), std::move(edges));
}

std::vector<EmbeddingViolation> validate_embedding(
    const EmbeddingMap& map, const Graph& host,
    const std::optional<TwoColoring>& colouring,
    std::optional<Colour> required_colour,
    const std::vector<std::vector<Vertex>>* candidate_sets) {
  std::vector<EmbeddingViolation> violations;
  const Graph& pattern = *map.pattern;
  if (static_cast<Vertex>(map.image.size()) != pattern.vertex_count()) {
    violations.push_back({"range", -1, -1});
    return violations;
  }
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
    if (map.image[v] < 0 || map.image[v] >= host.vertex_count())
      violations.push_back({"range", v, -1});
  }
  if (!violations.empty()) return violations;

  std::vector<Vertex> sorted = map.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    for (Vertex v = 0; v < pattern.vertex_count(); ++v)
      for (Vertex w = v + 1; w < pattern.vertex_count(); ++w)
        if (map.image[v] == map.image[w]) violations.push_back({"injectivity", v, w});
  }

  for (const auto& [u, v] : pattern.edges()) {
    Vertex hu = map.image[u], hv = map.image[v];
    if (!host.has_edge(hu, hv)) {
      violations.push_back({"missing-edge", u, v});
      continue;
    }
    if (colouring.has_value() && required_colour.has_value()) {
      if (colouring->colour(hu, hv) != *required_colour)
        violations.push_back({"wrong-colour", u, v});
    }
  }

  if (candidate_sets != nullptr) {
    for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
      const auto& allowed = (*candidate_sets)[v];
      if (allowed.empty()) continue;  // unconstrained
      if (std::find(allowed.begin(), allowed.end(), map.image[v]) == allowed.end())
        violations.push_back({"candidate", v, -1});
    }
  }
  return violations;
}

}  // namespace ramsey
