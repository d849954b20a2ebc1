// Copyright 2026 The circbeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCBETA_NUMERIC_HPP
#define CIRCBETA_NUMERIC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace circbeta::num {

/// Integrand that also receives the exact distances from x to the lower
/// and upper endpoints, so factors like |x - lo|^{-1/2} stay accurate.
using EndpointIntegrand = std::function<double(double x, double dist_lo, double dist_hi)>;

/// Tanh-sinh quadrature on a finite interval; tolerates integrable
/// endpoint singularities.
double integrate(const EndpointIntegrand& f, double lo, double hi, double rel_tol = 1e-10);
double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-10);

/// Iterated integral of f(x, y) over lo_x < x < hi_x, lo_y(x) < y < hi_y(x).
double integrate_2d(const std::function<double(double, double)>& f, double lo_x, double hi_x,
                    const std::function<double(double)>& lo_y, const std::function<double(double)>& hi_y,
                    double rel_tol = 1e-9);

/// Welford accumulator for a mean and its standard error.
class RunningStats {
 public:
  void add(double x);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance (0 when fewer than two samples).
  double variance() const;
  /// sample-std / sqrt(count); 0 when fewer than two samples.
  double stderr_of_mean() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  std::size_t cells = 0;  ///< after merging
};

/// Pearson goodness-of-fit. Adjacent cells (in the given order) are merged
/// until every expected count is at least min_expected.
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed, const std::vector<double>& probabilities,
                                double min_expected = 5.0);

/// Upper alpha-quantile of the chi-square law with dof degrees of freedom.
double chi_square_critical(std::size_t dof, double alpha);

/// Bin index of x in equal-width bins over [lo, hi), or -1 outside.
long bin_index(double x, double lo, double hi, std::size_t bins);

/// |a - b| / max(|a|, |b|, 1e-300).
double relative_error(double a, double b);

}  // namespace circbeta::num

#endif  // CIRCBETA_NUMERIC_HPP
