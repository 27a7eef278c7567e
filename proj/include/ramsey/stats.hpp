#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey {

// Upper regularized incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double regularized_gamma_q(double a, double x);

// Survival function of the chi-square distribution with df degrees of freedom.
double chi_square_sf(double statistic, int df);

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  // Categories with expected count below 5 get pooled into one bucket before
  // the statistic is computed; this records how many were pooled.
  int pooled_categories = 0;
};

// Pearson chi-square of observed counts against expected probabilities.
// probabilities need not be normalized; they are scaled to the observed total.
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& probabilities);

struct MomentSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

MomentSummary summarize(const std::vector<double>& values);

}  // namespace ramsey
