#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

// Exact rational on 64-bit components, enough for edge-count arithmetic at
// desk scale (numerators stay below n^2 * small constants).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    require(d != 0, ErrorCode::invalid_argument, "rational with zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace ramsey
