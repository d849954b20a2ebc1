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

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

#include "circbeta/distributions.hpp"
#include "circbeta/error.hpp"

using namespace circbeta;
using namespace circbeta::dist;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Sample mean with a generous 5-sigma band from the sample variance.
template <typename F>
void check_mean(F draw, std::size_t m, double expected) {
  double s = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = draw(i);
    s += v;
    s2 += v * v;
  }
  const double mean = s / m;
  const double var = s2 / m - mean * mean;
  CAPTURE(mean);
  CAPTURE(expected);
  CHECK(std::abs(mean - expected) <= 5.0 * std::sqrt(var / m) + 1e-12);
}

}  // namespace

TEST_CASE("streams are reproducible and independent") {
  RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  for (int i = 0; i < 5; ++i) {
    const auto va = a();
    CHECK(va == b());
    CHECK(va != c());
    CHECK(va != d());
  }
  CHECK(a.master_seed() == 42);
  CHECK(a.stream_index() == 3);
  CHECK(splitmix64(0) != splitmix64(1));
  CHECK_FALSE(generator_id().empty());
}

TEST_CASE("uniform draws stay in their ranges") {
  RngStream rng(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK((u > 0.0 && u < 1.0));
    const double t = rng.uniform_angle();
    CHECK((t > 0.0 && t <= 2.0 * kPi));
  }
}

TEST_CASE("Theta_nu second moment") {
  // |z|^2 has mean 2/(nu+1).
  for (double nu : {3.0, 5.0}) {
    check_mean([&](std::size_t i) { RngStream r(5, i); return std::norm(theta_nu(nu, r)); }, 20000, 2.0 / (nu + 1.0));
  }
  RngStream r(9, 0);
  CHECK(std::abs(std::abs(theta_nu(1.0, r)) - 1.0) < 1e-15);
  CHECK(std::abs(theta_nu(2.5, r)) < 1.0);
  CHECK_THROWS_AS(theta_nu(0.5, r), InvalidArgument);
}

TEST_CASE("Dirichlet weights") {
  const std::vector<double> ex{0.5, 1.0, 2.5};
  const double total = std::accumulate(ex.begin(), ex.end(), 0.0);
  for (std::size_t k = 0; k < ex.size(); ++k)
    check_mean([&](std::size_t i) { RngStream r(11, i); return dirichlet(ex, r).w[k]; }, 20000, ex[k] / total);
  RngStream r(2, 0);
  const auto w = dirichlet(ex, r).w;
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) == Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(dirichlet({}, r), InvalidArgument);
  CHECK_THROWS_AS(dirichlet({1.0, 0.0}, r), InvalidArgument);
  check_mean([&](std::size_t i) { RngStream s(12, i); return beta_draw(2.0, 3.0, s); }, 20000, 0.4);
}

TEST_CASE("power of the chord length on the circle") {
  // s = 2: density proportional to 2 - 2 cos phi, so E cos phi = -1/2.
  check_mean([](std::size_t i) { RngStream r(21, i); return std::cos(circle_pow(2.0, r)); }, 40000, -0.5);
  check_mean([](std::size_t i) { RngStream r(22, i); return std::cos(circle_pow(0.0, r)); }, 40000, 0.0);

  // Negative exponent: compare against direct quadrature of (2 sin(phi/2))^s.
  const double s = -0.5;
  boost::math::quadrature::tanh_sinh<double> ts;
  auto w = [s](double phi) { return std::pow(2.0 * std::sin(phi / 2.0), s); };
  const double z = ts.integrate(w, 0.0, 2.0 * kPi);
  const double m1 = ts.integrate([&](double phi) { return std::cos(phi) * w(phi); }, 0.0, 2.0 * kPi) / z;
  check_mean([&](std::size_t i) { RngStream r(23, i); return std::cos(circle_pow(s, r)); }, 40000, m1);

  RngStream r(3, 0);
  const auto c = circle_pow_counted(-0.5, r);
  CHECK(c.proposals == 1);
  CHECK_THROWS_AS(circle_pow(-1.0, r), InvalidArgument);
  CHECK_THROWS_AS(circle_pow(std::nan(""), r), InvalidArgument);
}

TEST_CASE("generalized Cauchy") {
  // gamma = 1 is the standard Cauchy: P(|c| < 1) = 1/2.
  check_mean([](std::size_t i) { RngStream r(31, i); return std::abs(gen_cauchy_real(1.0, r)) < 1.0 ? 1.0 : 0.0; },
             40000, 0.5);
  // gamma = 2: c = T_3/sqrt(3), so E c^2 = 1.
  check_mean([](std::size_t i) { RngStream r(32, i); const double c = gen_cauchy_real(2.0, r); return c * c; }, 40000,
             1.0);
  RngStream r(3, 0);
  CHECK_THROWS_AS(gen_cauchy_real(0.5, r), InvalidArgument);
}

TEST_CASE("complex Gaussian") {
  check_mean([](std::size_t i) { RngStream r(41, i); return std::norm(complex_gaussian(r)); }, 20000, 1.0);
  check_mean([](std::size_t i) { RngStream r(42, i); return complex_gaussian(r).real(); }, 20000, 0.0);
  RngStream r(4, 0);
  const auto g = complex_gaussian_matrix(3, r);
  CHECK(g.size() == 3);
}
