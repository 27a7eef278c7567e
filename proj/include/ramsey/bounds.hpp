#pragma once

#include "ramsey/rational.hpp"

namespace ramsey {

struct TuranBound {
  // Maximum edge count of an n-vertex graph with no K_{r+1}: (1 - 1/r) n^2 / 2.
  Rational max_edges;
  // Complementary lower bound used on cliques whose colouring avoids a K_{r+1}
  // in one colour: at least C(n,2) / (r+1) edges carry the other colour.
  Rational min_opposite_edges;
};

TuranBound turan_bound(std::int64_t r, std::int64_t n);

// Maximum edge count of an n-vertex graph with no K_{l,l}:
// (l-1)^{1/l} n^{2-1/l} + l - 1.
double kst_bound(std::int64_t l, std::int64_t n);

}  // namespace ramsey
