#include "ramsey/stats.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

// Series expansion of P(a,x), converges fast for x < a+1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), converges fast for x >= a+1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  require(a > 0.0 && x >= 0.0, ErrorCode::invalid_argument, "gamma_q domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double statistic, int df) {
  require(df > 0, ErrorCode::invalid_argument, "chi-square df must be positive");
  if (statistic <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * df, 0.5 * statistic);
}

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& probabilities) {
  require(observed.size() == probabilities.size() && observed.size() >= 2,
          ErrorCode::invalid_argument, "chi-square needs matching categories");
  double total_p = 0.0;
  std::uint64_t total_n = 0;
  for (double p : probabilities) {
    require(p >= 0.0, ErrorCode::invalid_argument, "negative probability");
    total_p += p;
  }
  for (auto n : observed) total_n += n;
  require(total_p > 0.0 && total_n > 0, ErrorCode::invalid_argument,
          "chi-square needs mass");

  ChiSquareResult result;
  double pooled_obs = 0.0, pooled_exp = 0.0;
  int kept = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double expected = probabilities[i] / total_p * static_cast<double>(total_n);
    if (expected < 5.0) {
      pooled_obs += static_cast<double>(observed[i]);
      pooled_exp += expected;
      ++result.pooled_categories;
      continue;
    }
    double d = static_cast<double>(observed[i]) - expected;
    result.statistic += d * d / expected;
    ++kept;
  }
  if (pooled_exp > 0.0) {
    double d = pooled_obs - pooled_exp;
    result.statistic += d * d / pooled_exp;
    ++kept;
  }
  result.df = kept - 1;
  if (result.df <= 0) {
    result.df = 0;
    result.p_value = 1.0;
  } else {
    result.p_value = chi_square_sf(result.statistic, result.df);
  }
  return result;
}

MomentSummary summarize(const std::vector<double>& values) {
  MomentSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
  return s;
}

}  // namespace ramsey
