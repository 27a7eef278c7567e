#pragma once

#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { red = 0, blue = 1 };

inline Colour opposite(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
inline const char* colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }

// Total red/blue labelling of a host graph's edge set.
class TwoColoring {
 public:
  TwoColoring() = default;
  TwoColoring(GraphPtr host, std::vector<Colour> by_edge_index);

  static TwoColoring uniform(GraphPtr host, Colour c) {
    return TwoColoring(host, std::vector<Colour>(host->edge_count(), c));
  }

  const Graph& host() const { return *host_; }
  GraphPtr host_ptr() const { return host_; }

  Colour colour_of_index(std::size_t edge_index) const { return colours_[edge_index]; }

  // Requires {u,v} to be a host edge.
  Colour colour(Vertex u, Vertex v) const {
    auto idx = host_->edge_index(u, v);
    require(idx >= 0, ErrorCode::invalid_argument, "colour query on a non-edge");
    return colours_[static_cast<std::size_t>(idx)];
  }

  bool has_edge_of(Vertex u, Vertex v, Colour c) const {
    auto idx = host_->edge_index(u, v);
    return idx >= 0 && colours_[static_cast<std::size_t>(idx)] == c;
  }

  std::size_t count(Colour c) const;

  // The subgraph formed by edges of one colour, on the same vertex set.
  Graph colour_subgraph(Colour c) const;

  const std::vector<Colour>& colours() const { return colours_; }

 private:
  GraphPtr host_;
  std::vector<Colour> colours_;
};

}  // namespace ramsey
