#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Caps for the exact searches. Exceeding a cap raises a loud "search-capped"
// error; there is never a silent approximate answer.
struct SearchLimits {
  int clique_set_cap = 32;    // |S| for monochromatic clique search
  int biclique_side_cap = 64;  // |A|, |B| for monochromatic biclique search
};

// Shortest induced cycle of length >= min_len, or nullopt when none exists.
// Iterative deepening over the target length with a deterministic vertex
// order; the returned sequence is cyclic and its vertex set induces exactly
// the cycle edges. The "none" answer is exhaustive at every size: once no
// induced path of the current target size exists, longer induced cycles
// cannot exist either and the search stops.
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int min_len);

// A clique of `size` vertices inside S whose edges all have colour c, or
// nullopt. S must induce a clique in the host.
std::optional<std::vector<Vertex>> find_monochromatic_clique(
    const TwoColoring& colouring, const std::vector<Vertex>& set, Colour c, int size,
    const SearchLimits& limits = {});

// An s-by-s complete bipartite subgraph between A and B whose edges all have
// colour c (missing host edges disqualify), or nullopt.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
find_monochromatic_biclique(const TwoColoring& colouring, const std::vector<Vertex>& a,
                            const std::vector<Vertex>& b, Colour c, int s,
                            const SearchLimits& limits = {});

// The colouring of K_m induced by a vertex partition: edge {i,j} is blue
// exactly when a blue K_{s,s} sits between parts i and j, red otherwise.
TwoColoring auxiliary_coloring(const TwoColoring& colouring,
                               const std::vector<std::vector<Vertex>>& parts, int s,
                               const SearchLimits& limits = {});

}  // namespace ramsey
