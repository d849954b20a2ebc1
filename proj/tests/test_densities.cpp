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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "circbeta/densities.hpp"
#include "circbeta/error.hpp"

using namespace circbeta;
using namespace circbeta::ens;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename F>
double gk(F f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 12, 1e-11);
}

template <typename F>
double gk2(F f, double lo, double hi) {
  return gk([&](double x) { return gk([&](double y) { return f(x, y); }, lo, hi); }, lo, hi);
}

}  // namespace

TEST_CASE("log |Gamma| for complex arguments") {
  for (double x : {0.3, 1.0, 2.5, 7.25, 40.0}) CHECK(log_abs_gamma(cplx{x, 0.0}) == Approx(std::lgamma(x)).epsilon(1e-12));
  // |Gamma(i)|^2 = pi / sinh(pi).
  CHECK(2.0 * log_abs_gamma(cplx{0.0, 1.0}) == Approx(std::log(kPi / std::sinh(kPi))).epsilon(1e-12));
  // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y).
  CHECK(2.0 * log_abs_gamma(cplx{0.5, 0.7}) == Approx(std::log(kPi / std::cosh(0.7 * kPi))).epsilon(1e-12));
  // Reflection region: Gamma(-1/2) = -2 sqrt(pi).
  CHECK(log_abs_gamma(cplx{-0.5, 0.0}) == Approx(std::log(2.0 * std::sqrt(kPi))).epsilon(1e-12));
}

TEST_CASE("single-point constants") {
  CHECK(log_cbe_constant(1, 3.0) == Approx(std::log(2.0 * kPi)));
  // N = 1 Selberg integral is the Beta function.
  CHECK(log_selberg(1, 2.5, 1.5, 0.7) ==
        Approx(std::lgamma(2.5) + std::lgamma(1.5) - std::lgamma(4.0)).epsilon(1e-12));
  CHECK(log_norm_MN(1, 0.5, 1.5, 2.0) ==
        Approx(std::lgamma(3.0) - std::lgamma(1.5) - std::lgamma(2.5)).epsilon(1e-12));
  CHECK(std::exp(log_norm_MN(3, 0.2, 0.4, 1.0)) == Approx(norm_constant_MN(3, 0.2, 0.4, 1.0)));
  CHECK(log_norm_MN_conjugate(2, cplx{0.4, 0.0}, 1.0) == Approx(log_norm_MN(2, 0.4, 0.4, 1.0)).epsilon(1e-12));
}

TEST_CASE("Cauchy normalizers") {
  // I_1(g) = sqrt(pi) Gamma(g - 1/2) / Gamma(g).
  for (double g : {0.9, 1.5, 3.0})
    CHECK(log_In_closed(1, cplx{g, 0.0}, 0.7) ==
          Approx(0.5 * std::log(kPi) + std::lgamma(g - 0.5) - std::lgamma(g)).epsilon(1e-12));
  // I_2 runs over the ordered region x > y: half of
  // int int (1+x^2)^-2 (1+y^2)^-2 (x-y)^2 = 2 (pi/2)^2.
  CHECK(std::exp(log_In_closed(2, cplx{2.0, 0.0}, 1.0)) == Approx(kPi * kPi / 4.0).epsilon(1e-12));
  for (std::size_t n : {1u, 2u, 3u})
    CHECK(log_In_chain(n, cplx{3.0, 0.4}, 0.6) == Approx(log_In_closed(n, cplx{3.0, 0.4}, 0.6)).epsilon(1e-10));
  CHECK(In_ratio(1, cplx{2.0, 0.0}, 1.0) ==
        Approx(std::exp(log_In_closed(2, cplx{2.0, 0.0}, 1.0) - log_In_closed(1, cplx{1.0, 0.0}, 1.0))).epsilon(1e-10));
  CHECK_THROWS_AS(log_In_closed(1, cplx{0.4, 0.0}, 1.0), InvalidArgument);
  // Generalized Cauchy normalizer at g = 1 is pi.
  CHECK(std::exp(log_gen_cauchy_constant(cplx{1.0, 0.0})) == Approx(1.0 / kPi).epsilon(1e-12));
}

TEST_CASE("densities integrate to one") {
  SUBCASE("circular beta, N = 2") {
    CHECK(gk2([](double x, double y) { return density_cbe(2.0, {x, y}); }, 0.0, 2.0 * kPi) ==
          Approx(1.0).epsilon(1e-9));
    CHECK(gk2([](double x, double y) { return density_cbe(4.0, {x, y}); }, 0.0, 2.0 * kPi) ==
          Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("circular Jacobi, N = 2") {
    CHECK(gk2([](double x, double y) { return density_circular_jacobi(2.0, 1.0, {x, y}); }, 0.0, 2.0 * kPi) ==
          Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("real orthogonal, N = 2") {
    CHECK(gk2([](double x, double y) { return density_real_orthogonal(0.5, 0.5, 2.0, {x, y}); }, 0.0, kPi) ==
          Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("Cauchy ensemble, N = 1") {
    boost::math::quadrature::tanh_sinh<double> ts;
    CHECK(ts.integrate([](double x) { return density_cauchy_ensemble(cplx{1.3, 0.5}, 1.0, {x}); }, -kInf, kInf) ==
          Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("Dixon-Anderson, n = 2") {
    boost::math::quadrature::tanh_sinh<double> ts;
    const std::vector<double> y{1.0, -0.5};
    CHECK(ts.integrate([&](double u) { return density_dixon_anderson(0.5, y, {u}); }, -0.5, 1.0) ==
          Approx(1.0).epsilon(1e-8));
    CHECK(density_dixon_anderson(0.5, y, {2.0}) == 0.0);
  }
}

TEST_CASE("dispatcher and argument checks") {
  DensityParams p;
  p.beta = 2.0;
  CHECK(density_eval(DensityKind::cbe, p, {1.0, 2.0}) == Approx(density_cbe(2.0, {1.0, 2.0})));
  CHECK_THROWS_AS(density_cbe(0.0, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(density_circular_jacobi(-1.0, 1.0, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(density_dixon_anderson(1.0, {1.0, 0.0}, {}), InvalidArgument);
  CHECK(density_cauchy_marginal_x(cplx{2.0, 0.0}, 1.0, {0.0, 1.0}) == 0.0);
}
