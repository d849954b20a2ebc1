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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "circbeta/numeric.hpp"

using namespace circbeta::num;
using doctest::Approx;

constexpr double kPi = std::numbers::pi;

TEST_CASE("quadrature with endpoint singularities") {
  // int_0^1 x^{-1/2} dx = 2; int_{-1}^{1} (1 - x^2)^{-1/2} dx = pi.
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) == Approx(2.0).epsilon(1e-10));
  CHECK(integrate([](double, double l, double r) { return 1.0 / std::sqrt(l * r); }, -1.0, 1.0) ==
        Approx(kPi).epsilon(1e-10));
  // The distance to the upper end must be exact even very close to it.
  CHECK(integrate([](double, double, double r) { return std::pow(r, -0.9); }, 3.0, 4.0) ==
        Approx(10.0).epsilon(1e-8));
  // Triangle: int_0^1 int_0^x xy = 1/8.
  CHECK(integrate_2d([](double x, double y) { return x * y; }, 0.0, 1.0, [](double) { return 0.0; },
                     [](double x) { return x; }) == Approx(0.125).epsilon(1e-10));
}

TEST_CASE("running statistics") {
  RunningStats s;
  CHECK(s.stderr_of_mean() == 0.0);
  s.add(3.0);
  CHECK(s.variance() == 0.0);
  CHECK(s.stderr_of_mean() == 0.0);
  for (double x : {1.0, 2.0, 6.0}) s.add(x);
  CHECK(s.count() == 4);
  CHECK(s.mean() == Approx(3.0));
  // Deviations 0, -2, -1, 3 -> sum of squares 14, variance 14/3.
  CHECK(s.variance() == Approx(14.0 / 3.0));
  CHECK(s.stderr_of_mean() == Approx(std::sqrt(14.0 / 3.0 / 4.0)));
}

TEST_CASE("chi-square goodness of fit") {
  // Hand-computed: expected 25 each, deviations (5, -5, 0, 0): 50/25 = 2.
  const auto r = chi_square_test({30, 20, 25, 25}, {0.25, 0.25, 0.25, 0.25});
  CHECK(r.statistic == Approx(2.0));
  CHECK(r.dof == 3);
  CHECK(r.cells == 4);
  // P(chi2_3 > 2) = 0.5724067...
  CHECK(r.p_value == Approx(0.5724067).epsilon(1e-6));

  // Small cells merge until every expected count reaches 5.
  const auto m = chi_square_test({1, 2, 47, 50}, {0.02, 0.03, 0.45, 0.5});
  CHECK(m.cells == 3);
  CHECK(m.dof == 2);

  // 95% point of chi2 with one degree of freedom.
  CHECK(chi_square_critical(1, 0.05) == Approx(3.841458820694124).epsilon(1e-10));
}

TEST_CASE("binning and relative error") {
  CHECK(bin_index(0.0, 0.0, 1.0, 4) == 0);
  CHECK(bin_index(0.999, 0.0, 1.0, 4) == 3);
  CHECK(bin_index(1.0, 0.0, 1.0, 4) == -1);
  CHECK(bin_index(-0.1, 0.0, 1.0, 4) == -1);
  CHECK(relative_error(1.0, 1.0) == 0.0);
  CHECK(relative_error(2.0, 1.0) == Approx(0.5));
  CHECK(relative_error(0.0, 0.0) == 0.0);
}
