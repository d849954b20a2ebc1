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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circbeta/distributions.hpp"
#include "circbeta/error.hpp"
#include "circbeta/linalg.hpp"
#include "circbeta/polynomials.hpp"

using namespace circbeta;
using namespace circbeta::poly;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<cplx> alphas_for(std::size_t n, std::uint64_t seed) {
  dist::RngStream rng(seed, 1);
  std::vector<cplx> a;
  for (std::size_t j = 0; j + 1 < n; ++j) a.push_back(std::polar(0.85 * std::sqrt(rng.uniform01()), rng.uniform_angle()));
  a.push_back(std::polar(1.0, rng.uniform_angle()));
  return a;
}

// det(z I - M) by LU: an oracle independent of the recurrences.
cplx char_poly_at(const CMatrix& m, cplx z) {
  return (z * CMatrix::Identity(m.rows(), m.cols()) - m).fullPivLu().determinant();
}

}  // namespace

TEST_CASE("polynomial basics") {
  const auto p = PolynomialC::from_roots({cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{-3.0, 0.0}});
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(std::abs(p(cplx{2.0, 0.0})) < 1e-14);
  CHECK(std::abs(p(cplx{0.0, 0.0}) - 6.0) < 1e-14);
  // p = z^3 - 7z + 6, p' = 3z^2 - 7.
  CHECK(std::abs(p.derivative(cplx{1.0, 0.0}) + 4.0) < 1e-14);
  CHECK(PolynomialC({cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{1e-20, 0.0}}).degree() == 1);
  CHECK_THROWS_AS(PolynomialC({}), InvalidArgument);
  CHECK_THROWS_AS(PolynomialC({cplx{std::nan(""), 0.0}}), InvalidArgument);
}

TEST_CASE("coupled recurrence reproduces the Hessenberg characteristic polynomial") {
  for (std::size_t n : {1u, 2u, 4u, 7u}) {
    const auto alphas = alphas_for(n, n);
    const auto h = linalg::build_hessenberg(linalg::SchurParameters(alphas)).matrix();
    const auto run = szego_run(alphas);
    CHECK(run.k == n);
    CHECK(run.chi.is_monic());
    for (cplx z : {cplx{0.3, 0.1}, cplx{-1.2, 0.5}, cplx{0.0, 2.0}})
      CHECK(std::abs(run.chi(z) - char_poly_at(h, z)) < 1e-11 * std::max(1.0, std::abs(run.chi(z))));
  }
}

TEST_CASE("seeding with t gives the row-scaled matrix") {
  const auto alphas = alphas_for(5, 17);
  const cplx t = std::polar(1.0, 1.1);
  const auto h = linalg::build_hessenberg(linalg::SchurParameters(alphas));
  const auto scaled = linalg::rank1_row_scale(h, t).matrix();
  const auto run = szego_run(alphas, t);
  for (cplx z : {cplx{0.4, -0.3}, cplx{1.5, 0.0}})
    CHECK(std::abs(run.chi(z) - char_poly_at(scaled, z)) < 1e-11 * std::max(1.0, std::abs(run.chi(z))));
}

TEST_CASE("bottom recurrence gives the trailing principal minor") {
  const std::size_t n = 6;
  const auto alphas = alphas_for(n, 23);
  const CMatrix h = linalg::build_hessenberg(linalg::SchurParameters(alphas)).matrix();
  const auto run = bottom_run(alphas);
  CHECK(run.chi.degree() == n - 1);
  const CMatrix bottom = h.bottomRightCorner(n - 1, n - 1);
  for (cplx z : {cplx{0.2, 0.7}, cplx{-0.9, -0.1}})
    CHECK(std::abs(run.chi(z) - char_poly_at(bottom, z)) < 1e-11 * std::max(1.0, std::abs(run.chi(z))));
}

TEST_CASE("three-term step by hand") {
  // p1 = z - c; p2 = ((z - c2)/b) p1 + (1 - 1/b)(1 + z^2).
  const auto p0 = PolynomialC::one();
  const auto p1 = three_term_step(p0, p0, 1.0, 0.5);
  CHECK(std::abs(p1(cplx{0.5, 0.0})) < 1e-15);
  const auto p2 = three_term_step(p1, p0, 0.5, -1.0);
  // ((z+1)(z-0.5))/0.5 - (1+z^2) = z^2 + z - 2 = (z+2)(z-1).
  CHECK(p2.is_monic());
  CHECK(std::abs(p2(cplx{1.0, 0.0})) < 1e-14);
  CHECK(std::abs(p2(cplx{-2.0, 0.0})) < 1e-14);
  CHECK_THROWS_AS(three_term_step(p0, p0, 0.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(three_term_step(p1, p0, 1.5, 0.0), InvalidArgument);
}

TEST_CASE("companion roots and their classification") {
  const auto roots = companion_roots(PolynomialC::from_roots({cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{-3.0, 0.0}}));
  REQUIRE(roots.size() == 3);
  std::vector<double> re;
  for (auto r : roots) re.push_back(r.real());
  std::sort(re.begin(), re.end());
  CHECK(re[0] == Approx(-3.0));
  CHECK(re[1] == Approx(1.0));
  CHECK(re[2] == Approx(2.0));

  const auto real = real_roots_sorted(PolynomialC::from_roots({cplx{0.5, 0.0}, cplx{-1.0, 0.0}, cplx{4.0, 0.0}}));
  REQUIRE(real.roots.size() == 3);
  CHECK(real.roots[0] == Approx(4.0));
  CHECK(real.roots[1] == Approx(0.5));
  CHECK(real.roots[2] == Approx(-1.0));
  CHECK(real.max_abs_imag < 1e-12);
  CHECK_THROWS_AS(real_roots_sorted(PolynomialC({cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}})), NotRealRooted);

  // z^4 - 1: angles pi/2, pi, 3pi/2, 2pi.
  const auto circ = unit_circle_angles(PolynomialC({cplx{-1.0, 0.0}, 0.0, 0.0, 0.0, cplx{1.0, 0.0}}));
  REQUIRE(circ.angles.size() == 4);
  CHECK(circ.angles[0] == Approx(std::numbers::pi / 2));
  CHECK(circ.angles[3] == Approx(kTwoPi));
  CHECK_THROWS_AS(unit_circle_angles(PolynomialC::from_roots({cplx{2.0, 0.0}})), NotUnimodular);
}

TEST_CASE("single-point perturbation rotates by arg t") {
  linalg::UnitEigenData eig{{1.0}, {1.0}};
  const auto ps = perturbed_spectrum(eig, std::polar(1.0, 0.4));
  CHECK(ps.new_angles[0] == Approx(1.4).epsilon(1e-14));
  const auto same = perturbed_spectrum(eig, cplx{1.0, 0.0});
  CHECK(same.new_angles[0] == 1.0);
}

TEST_CASE("perturbed spectrum zeros the rational function and matches the scaled matrix") {
  const auto alphas = alphas_for(5, 31);
  const auto h = linalg::build_hessenberg(linalg::SchurParameters(alphas));
  const auto eig = linalg::eigen_unit(h);
  const cplx t = std::polar(1.0, 2.2);
  const auto ps = perturbed_spectrum(eig, t);
  CHECK(cyclically_interlaced(eig.angles, ps.new_angles));
  const auto direct = linalg::eigen_unit(linalg::rank1_row_scale(h, t));
  auto sorted = ps.new_angles;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    CHECK(std::abs(perturbation_function(eig, t, std::polar(1.0, ps.new_angles[i]))) < 1e-10);
    CHECK(sorted[i] == Approx(direct.angles[i]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(perturbed_spectrum(eig, cplx{2.0, 0.0}), InvalidArgument);
}

TEST_CASE("cyclic interlacing predicate") {
  CHECK(cyclically_interlaced({1.0, 3.0}, {2.0, 4.0}));
  CHECK(cyclically_interlaced({1.0, 3.0}, {0.5, 2.0}));
  CHECK_FALSE(cyclically_interlaced({1.0, 3.0}, {1.5, 2.0}));
  CHECK_FALSE(cyclically_interlaced({1.0, 3.0}, {1.0, 2.0}));
  InterlacedRealSpectrum r{{3.0, 1.0, -1.0}, {2.0, 0.0}};
  CHECK(r.is_strictly_interlaced());
  InterlacedRealSpectrum bad{{3.0, 2.5, -1.0}, {2.0, 0.0}};
  CHECK_FALSE(bad.is_strictly_interlaced());
}

TEST_CASE("Cayley map and its inverse") {
  // x = 0 maps to e^{i pi}; x = 1 to (1 - i)/(1 + i) = -i.
  const auto th = cayley_angles({0.0, 1.0, -2.5});
  CHECK(th[0] == Approx(std::numbers::pi));
  CHECK(th[1] == Approx(1.5 * std::numbers::pi));
  const cplx check = (cplx{-2.5, 0.0} - cplx{0.0, 1.0}) / (cplx{-2.5, 0.0} + cplx{0.0, 1.0});
  CHECK(std::abs(std::polar(1.0, th[2]) - check) < 1e-15);
  for (double x : {0.0, 1.0, -2.5, 40.0}) CHECK(inverse_cayley(cayley_angles({x})[0]) == Approx(x).epsilon(1e-12));
}
