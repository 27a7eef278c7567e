#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// A canonical S(2,C,n): an ordered list of C-element blocks covering every
// unordered point pair exactly once. Blocks are sorted lexicographically, so
// the same parameters always produce the same design.
struct BlockDesign {
  Vertex n = 0;
  int block_size = 0;
  std::vector<std::vector<Vertex>> blocks;  // each sorted; list sorted lexicographically
  std::optional<std::vector<std::vector<int>>> parallel_classes;  // block indices

  std::size_t expected_block_count() const {
    return static_cast<std::size_t>(n) * (n - 1) /
           (static_cast<std::size_t>(block_size) * (block_size - 1));
  }
};

// S(2,3,n) for n = 1 or 3 (mod 6), n >= 7. Bose construction for n = 3 (mod 6),
// Skolem construction for n = 1 (mod 6).
BlockDesign steiner_triple(Vertex n);

// The affine plane AG(2,q) as a resolvable S(2,q,q^2), lines y = ax+b plus the
// verticals, for prime q. parallel_classes holds the q+1 pencils.
BlockDesign affine_plane(Vertex q);

struct DesignReport {
  // Pairs covered zero times / more than once, as (u, v, multiplicity).
  std::vector<std::tuple<Vertex, Vertex, int>> pair_violations;
  std::vector<int> block_size_violations;        // offending block indices
  std::vector<int> class_disjointness_violations;  // offending class indices
  std::vector<std::size_t> class_coverage;         // covered points per class
  bool block_count_matches = false;

  bool valid() const {
    return pair_violations.empty() && block_size_violations.empty() &&
           class_disjointness_violations.empty() && block_count_matches;
  }
};

DesignReport validate_design(const BlockDesign& d);

}  // namespace ramsey
