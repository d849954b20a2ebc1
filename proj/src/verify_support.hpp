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

#ifndef CIRCBETA_SRC_VERIFY_SUPPORT_HPP
#define CIRCBETA_SRC_VERIFY_SUPPORT_HPP

// Random test-point generators shared by the verification checks.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "circbeta/distributions.hpp"
#include "circbeta/linalg.hpp"

namespace circbeta::verify::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double uniform(dist::RngStream& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

/// Uniform point of the disk of radius r_max.
inline cplx random_disk(dist::RngStream& rng, double r_max = 1.0) {
  const double r = r_max * std::sqrt(rng.uniform01());
  return std::polar(r, rng.uniform_angle());
}

/// n sorted uniform values in (lo, hi) with pairwise gaps >= min_gap.
inline std::vector<double> separated_points(dist::RngStream& rng, std::size_t n, double lo, double hi,
                                            double min_gap) {
  for (;;) {
    std::vector<double> x(n);
    for (auto& v : x) v = uniform(rng, lo, hi);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (std::size_t i = 1; i < n; ++i) ok = ok && (x[i] - x[i - 1] >= min_gap);
    if (ok) return x;
  }
}

/// Schur parameters: n - 1 interior ones in the disk of radius r_max and a
/// unimodular last one.
inline std::vector<cplx> random_schur(dist::RngStream& rng, std::size_t n, double r_max = 0.95) {
  std::vector<cplx> alphas;
  alphas.reserve(n);
  for (std::size_t j = 0; j + 1 < n; ++j) alphas.push_back(random_disk(rng, r_max));
  alphas.push_back(std::polar(1.0, rng.uniform_angle()));
  return alphas;
}

/// Exact e^{ia} - e^{ib} from the angles (no cancellation when a ~ b).
inline cplx unit_diff(double a, double b) {
  return cplx{0.0, 2.0 * std::sin(0.5 * (a - b))} * std::polar(1.0, 0.5 * (a + b));
}

}  // namespace circbeta::verify::detail

#endif  // CIRCBETA_SRC_VERIFY_SUPPORT_HPP
