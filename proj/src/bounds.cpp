#include "ramsey/bounds.hpp"

#include <cmath>

#include "ramsey/error.hpp"

namespace ramsey {

TuranBound turan_bound(std::int64_t r, std::int64_t n) {
  require(r >= 1 && n >= 0, ErrorCode::invalid_argument, "turan_bound domain");
  TuranBound bound;
  bound.max_edges = Rational((r - 1) * n * n, 2 * r);
  bound.min_opposite_edges = Rational(n * (n - 1) / 2, r + 1);
  return bound;
}

double kst_bound(std::int64_t l, std::int64_t n) {
  require(l >= 1 && n >= 0, ErrorCode::invalid_argument, "kst_bound domain");
  double ld = static_cast<double>(l);
  double nd = static_cast<double>(n);
  return std::pow(ld - 1.0, 1.0 / ld) * std::pow(nd, 2.0 - 1.0 / ld) + ld - 1.0;
}

}  // namespace ramsey
