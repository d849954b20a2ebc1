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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "circbeta/densities.hpp"
#include "circbeta/error.hpp"
#include "circbeta/format.hpp"
#include "circbeta/numeric.hpp"
#include "circbeta/polynomials.hpp"
#include "circbeta/verify.hpp"
#include "verify_support.hpp"

namespace circbeta::verify {

using detail::kTwoPi;
using num::relative_error;
using ens::In_ratio;
using ens::log_In_chain;
using ens::log_In_closed;

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kIntegralTolerance = 1e-6;
constexpr double kNormalizationTolerance = 1e-6;

// With x = tan u, (1 + x^2)^{-g} dx = cos^{2g-2}(u) du on (-pi/2, pi/2).
// cos u is taken as the sine of the distance to the nearer end, which stays
// accurate where cos u underflows relative to u.
double first_integral(double gamma) {
  return num::integrate(
      [gamma](double, double dl, double dr) { return std::pow(std::sin(std::min(dl, dr)), 2.0 * gamma - 2.0); },
      -kHalfPi, kHalfPi, 1e-12);
}

// Ordered x > y: (cos u cos v)^{2g-2-2d} |sin(u - v)|^{2d} over v < u.
double second_integral(double gamma, double d) {
  const double e = 2.0 * gamma - 2.0 - 2.0 * d;
  return num::integrate_2d(
      [=](double u, double v) { return std::pow(std::cos(u) * std::cos(v), e) * std::pow(std::sin(u - v), 2.0 * d); },
      -kHalfPi, kHalfPi, [](double) { return -kHalfPi; }, [](double u) { return u; }, 1e-11);
}

}  // namespace

std::vector<CheckReport> check_In_recurrence(double gamma, double d) {
  if (!(d > 0.0)) throw InvalidArgument("check_In_recurrence: d must be positive");
  if (!(2.0 * gamma > 2.0 * d + 1.0)) throw InvalidArgument("check_In_recurrence: integral diverges (2 gamma <= 2 d + 1)");
  const std::string label = "gamma=" + format_shortest(gamma) + ",d=" + format_shortest(d);

  CheckReport first("In_recurrence/first_order", kIntegralTolerance);
  CheckReport chain("In_recurrence/second_order_recurrence", kIntegralTolerance);
  CheckReport closed("In_recurrence/second_order_closed_form", kIntegralTolerance);
  CheckReport consistency("In_recurrence/chain_vs_closed_form", kIntegralTolerance);

  const double i1 = first_integral(gamma);
  const double i1_shift = first_integral(gamma - d);
  const double i2 = second_integral(gamma, d);

  first.record(relative_error(i1, std::exp(log_In_closed(1, gamma, d))), label);
  first.record(relative_error(i1, In_ratio(0, gamma, d)), label);
  chain.record(relative_error(i2, In_ratio(1, gamma, d) * i1_shift), label);
  closed.record(relative_error(i2, std::exp(log_In_closed(2, gamma, d))), label);
  // Orders beyond the integrability limit make both evaluations throw.
  for (std::size_t n = 1; n <= 6; ++n) {
    double chained = 0.0;
    double closed_form = 0.0;
    try {
      chained = std::exp(log_In_chain(n, gamma, d));
      closed_form = std::exp(log_In_closed(n, gamma, d));
    } catch (const InvalidArgument&) {
      break;
    }
    consistency.record(relative_error(chained, closed_form), label + ",n=" + std::to_string(n));
  }

  std::vector<CheckReport> out{first, chain, closed, consistency};
  if (gamma == 1.0) {
    CheckReport unit("In_recurrence/unit_gamma", kIntegralTolerance);
    unit.record(relative_error(i1, std::numbers::pi), label);
    unit.record(relative_error(In_ratio(0, 1.0, d), std::numbers::pi), label);
    out.push_back(unit);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conditional densities

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t cells) {
  std::vector<double> e(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i)
    e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
  e.front() = lo;
  e.back() = hi;
  return e;
}

CheckReport goodness_of_fit(const std::string& name, const std::vector<std::uint64_t>& counts,
                            const std::vector<double>& cell_mass) {
  const double total = std::accumulate(cell_mass.begin(), cell_mass.end(), 0.0);
  std::vector<double> probs(cell_mass.size());
  std::transform(cell_mass.begin(), cell_mass.end(), probs.begin(), [total](double m) { return m / total; });
  const auto res = num::chi_square_test(counts, probs);
  CheckReport r(name, num::chi_square_critical(res.dof, kPerTestAlpha), Metric::chi_square);
  r.record(res.statistic, "cells=" + std::to_string(res.cells));
  r.trials = static_cast<std::size_t>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  r.p_value = res.p_value;
  r.note = "dof=" + std::to_string(res.dof) + ", per-test alpha=" + format_shortest(kPerTestAlpha);
  return r;
}

CheckReport normalization(const std::string& name, const std::vector<double>& cell_mass) {
  CheckReport r(name, kNormalizationTolerance);
  r.record(relative_error(std::accumulate(cell_mass.begin(), cell_mass.end(), 0.0), 1.0), "total mass");
  return r;
}

// Draw of the perturbed angles given theta: weights ~ Dirichlet(d, ..., d, d0)
// with d0 attached to the last angle, and t with density ~ |1 - t|^{d0+(n-1)d-1}.
std::vector<double> sample_perturbed(const std::vector<double>& theta, double d0, double d, dist::RngStream& rng) {
  const std::size_t n = theta.size();
  std::vector<double> exps(n, d);
  exps.back() = d0;
  linalg::UnitEigenData eig;
  eig.angles = theta;
  eig.weights = dist::dirichlet(exps, rng).w;
  const double s = d0 + static_cast<double>(n - 1) * d - 1.0;
  return poly::perturbed_spectrum(eig, std::polar(1.0, dist::circle_pow(s, rng))).new_angles;
}

std::vector<CheckReport> circle_uniform(std::size_t M, std::uint64_t seed) {
  const std::vector<double> theta{2.0};
  constexpr std::size_t kBins = 20;
  std::vector<std::uint64_t> counts(kBins, 0);
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(seed, i);
    const double psi = sample_perturbed(theta, 1.0, 1.0, rng)[0];
    // Offset from theta inside the single gap (theta - 2pi, theta).
    double off = psi - theta[0];
    if (off <= 0.0) off += kTwoPi;
    const long b = num::bin_index(off, 0.0, kTwoPi, kBins);
    if (b >= 0) ++counts[static_cast<std::size_t>(b)];
  }
  const auto edges = linspace(0.0, kTwoPi, kBins);
  std::vector<double> mass(kBins);
  for (std::size_t b = 0; b < kBins; ++b)
    mass[b] = num::integrate(
        [&](double off) { return ens::density_conditional_ap(1.0, 1.0, theta, {linalg::wrap_angle(theta[0] + off)}); },
        edges[b], edges[b + 1]);
  return {goodness_of_fit("conditional_densities/circle_uniform", counts, mass),
          normalization("conditional_densities/circle_uniform_normalization", mass)};
}

std::vector<CheckReport> circle_pair(std::size_t M, std::uint64_t seed) {
  const std::vector<double> theta{1.0, 4.0};
  constexpr double d0 = 1.5;
  constexpr double d = 0.5;
  constexpr std::size_t kCells = 6;
  const double lo0 = theta[1] - kTwoPi;
  std::vector<std::uint64_t> counts(kCells * kCells, 0);
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(seed, i);
    const auto psi = sample_perturbed(theta, d0, d, rng);
    const double p0 = psi[0] > theta[0] ? psi[0] - kTwoPi : psi[0];
    const long b0 = num::bin_index(p0, lo0, theta[0], kCells);
    const long b1 = num::bin_index(psi[1], theta[0], theta[1], kCells);
    if (b0 >= 0 && b1 >= 0) ++counts[static_cast<std::size_t>(b0) * kCells + static_cast<std::size_t>(b1)];
  }
  const auto e0 = linspace(lo0, theta[0], kCells);
  const auto e1 = linspace(theta[0], theta[1], kCells);
  std::vector<double> mass(kCells * kCells);
  auto f = [&](double a, double b) { return ens::density_conditional_ap(d0, d, theta, {linalg::wrap_angle(a), b}); };
  for (std::size_t i = 0; i < kCells; ++i)
    for (std::size_t j = 0; j < kCells; ++j)
      mass[i * kCells + j] = num::integrate_2d(
          f, e0[i], e0[i + 1], [&, j](double) { return e1[j]; }, [&, j](double) { return e1[j + 1]; });
  return {goodness_of_fit("conditional_densities/circle_pair", counts, mass),
          normalization("conditional_densities/circle_pair_normalization", mass)};
}

// One-dimensional cell for the factorized Cauchy integrand. In the `atan`
// space the variable is u = atan x. Anchors mark ends that coincide with a
// pole (index >= 0) or with infinity (kInfinity), where the integrand is
// singular and the exact distance to the end is used.
constexpr int kNoAnchor = -1;
constexpr int kInfinity = -2;

struct LineCell {
  double lo;
  double hi;
  bool atan_space;
  int lo_anchor = kNoAnchor;
  int hi_anchor = kNoAnchor;
};

struct CauchyPairSetup {
  std::vector<double> y{0.7, -0.5};
  double d0 = 1.5;
  std::vector<double> d{0.5, 0.5};
  double gamma() const { return 0.5 * (d0 + d[0] + d[1] + 1.0); }
};

// Integral over the cell of (1 + x^2)^{-g} prod_l |x - y_l|^{d_l - 1} x^k.
// In atan space every power of cos u is collected into one exponent so that
// nothing overflows as u -> +-pi/2.
double cauchy_moment(const CauchyPairSetup& s, const LineCell& c, int k) {
  const double g = s.gamma();
  double cos_exponent = 2.0 * g - 2.0 - static_cast<double>(k);
  for (double dl : s.d) cos_exponent += 1.0 - dl;
  auto f = [&](double v, double dl, double dr) {
    double value = 1.0;
    if (c.atan_space) {
      const double cos_u =
          c.lo_anchor == kInfinity ? std::sin(dl) : c.hi_anchor == kInfinity ? std::sin(dr) : std::cos(v);
      value = std::pow(cos_u, cos_exponent) * std::pow(std::sin(v), k);
    } else {
      value = std::pow(1.0 + v * v, -g) * std::pow(v, k);
    }
    for (std::size_t l = 0; l < s.y.size(); ++l) {
      const int li = static_cast<int>(l);
      double dist;
      if (c.atan_space) {
        // |tan v - tan a| = |sin(v - a)| / (cos v cos a); the cos v part is
        // already in cos_exponent.
        const double a = std::atan(s.y[l]);
        const double delta = c.lo_anchor == li ? dl : c.hi_anchor == li ? -dr : v - a;
        dist = std::abs(std::sin(delta)) / std::cos(a);
      } else {
        dist = c.lo_anchor == li ? dl : c.hi_anchor == li ? dr : std::abs(v - s.y[l]);
      }
      value *= std::pow(dist, s.d[l] - 1.0);
    }
    return value;
  };
  return num::integrate(f, c.lo, c.hi, 1e-12);
}

std::vector<LineCell> split(double lo, double hi, std::size_t cells, bool atan_space, int lo_anchor, int hi_anchor) {
  const auto e = linspace(lo, hi, cells);
  std::vector<LineCell> out;
  for (std::size_t i = 0; i < cells; ++i)
    out.push_back({e[i], e[i + 1], atan_space, i == 0 ? lo_anchor : kNoAnchor, i + 1 == cells ? hi_anchor : kNoAnchor});
  return out;
}

std::vector<CheckReport> cauchy_pair(std::size_t M, std::uint64_t seed) {
  const CauchyPairSetup s;
  const double g = s.gamma();
  const auto& y = s.y;
  constexpr std::size_t kCells = 4;

  std::vector<std::uint64_t> counts(kCells * kCells * kCells, 0);
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(seed, i);
    const auto q = dist::dirichlet({s.d0, s.d[0], s.d[1]}, rng).w;
    const double c = dist::gen_cauchy_real(g, rng);
    // q0 P(z) = (z - c)(z - y1)(z - y2) - (1 + z^2)(q1 (z - y2) + q2 (z - y1)).
    const double e1 = y[0] + y[1];
    const double e2 = y[0] * y[1];
    const double lin = q[1] + q[2];
    const double cst = -(q[1] * y[1] + q[2] * y[0]);
    std::vector<cplx> coeffs{-c * e2 - cst, e2 + c * e1 - lin, -e1 - c - cst, 1.0 - lin};
    for (auto& v : coeffs) v /= q[0];
    const auto roots = poly::real_roots_sorted(poly::PolynomialC(coeffs)).roots;
    const long b0 = num::bin_index(std::atan(roots[0]), std::atan(y[0]), kHalfPi, kCells);
    const long b1 = num::bin_index(roots[1], y[1], y[0], kCells);
    const long b2 = num::bin_index(std::atan(roots[2]), -kHalfPi, std::atan(y[1]), kCells);
    if (b0 >= 0 && b1 >= 0 && b2 >= 0)
      ++counts[(static_cast<std::size_t>(b0) * kCells + static_cast<std::size_t>(b1)) * kCells +
               static_cast<std::size_t>(b2)];
  }

  const std::vector<std::vector<LineCell>> cells{
      split(std::atan(y[0]), kHalfPi, kCells, true, 0, kInfinity),
      split(y[1], y[0], kCells, false, 1, 0),
      split(-kHalfPi, std::atan(y[1]), kCells, true, kInfinity, 1),
  };
  // mom[j][cell][k]
  std::vector<std::vector<std::vector<double>>> mom(3, std::vector<std::vector<double>>(kCells, std::vector<double>(3)));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t c = 0; c < kCells; ++c)
      for (int k = 0; k < 3; ++k) mom[j][c][static_cast<std::size_t>(k)] = cauchy_moment(s, cells[j][c], k);

  double log_pref = ens::log_cauchy_conditional_constant(cplx{g, 0.0}, s.d);
  for (std::size_t j = 0; j < 2; ++j) log_pref += (g - s.d[j]) * std::log1p(y[j] * y[j]);
  log_pref += (1.0 - s.d[0] - s.d[1]) * std::log(y[0] - y[1]);
  const double pref = std::exp(log_pref);

  // prod_{j<k}(x_j - x_k) = det[x_j^{2-k}] expanded over permutations.
  std::vector<int> perm{0, 1, 2};
  std::vector<double> mass(kCells * kCells * kCells, 0.0);
  do {
    int inversions = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) inversions += perm[a] > perm[b];
    const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t c0 = 0; c0 < kCells; ++c0)
      for (std::size_t c1 = 0; c1 < kCells; ++c1)
        for (std::size_t c2 = 0; c2 < kCells; ++c2)
          mass[(c0 * kCells + c1) * kCells + c2] += sign * mom[0][c0][2 - perm[0]] * mom[1][c1][2 - perm[1]] *
                                                     mom[2][c2][2 - perm[2]];
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& m : mass) m *= pref;

  // The factorized integrand must agree with the library's density.
  CheckReport form("conditional_densities/cauchy_pair_density_form", 1e-10);
  dist::RngStream probe(seed, M + 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> x{y[0] + 3.0 * probe.uniform01(), y[1] + (y[0] - y[1]) * probe.uniform01(),
                                y[1] - 3.0 * probe.uniform01()};
    double direct = pref * (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
    for (double xv : x) {
      direct *= std::pow(1.0 + xv * xv, -g);
      for (std::size_t l = 0; l < 2; ++l) direct *= std::pow(std::abs(xv - y[l]), s.d[l] - 1.0);
    }
    form.record(relative_error(direct, ens::density_cauchy_conditional(s.d0, s.d, 0.0, y, x)));
  }
  return {goodness_of_fit("conditional_densities/cauchy_pair", counts, mass),
          normalization("conditional_densities/cauchy_pair_normalization", mass), form};
}

std::vector<CheckReport> dixon_anderson(std::size_t M, std::uint64_t seed) {
  const std::vector<double> y{0.9, -0.6};
  constexpr double d = 2.0;
  constexpr std::size_t kBins = 20;
  const std::size_t n = y.size();
  std::vector<std::uint64_t> counts(kBins, 0);
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(seed, i);
    const auto mu = dist::dirichlet(std::vector<double>(n, d), rng).w;
    // sum_j mu_j prod_{l != j} (z - y_l)
    std::vector<cplx> sum(n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<cplx> others;
      for (std::size_t l = 0; l < n; ++l)
        if (l != j) others.emplace_back(y[l], 0.0);
      const auto p = poly::PolynomialC::from_roots(others);
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) sum[k] += mu[j] * p.coeffs()[k];
    }
    const auto u = poly::real_roots_sorted(poly::PolynomialC(sum)).roots;
    const long b = num::bin_index(u[0], y[1], y[0], kBins);
    if (b >= 0) ++counts[static_cast<std::size_t>(b)];
  }
  const auto edges = linspace(y[1], y[0], kBins);
  std::vector<double> mass(kBins);
  for (std::size_t b = 0; b < kBins; ++b)
    mass[b] = num::integrate([&](double u) { return ens::density_dixon_anderson(d, y, {u}); }, edges[b], edges[b + 1]);
  return {goodness_of_fit("conditional_densities/dixon_anderson", counts, mass),
          normalization("conditional_densities/dixon_anderson_normalization", mass)};
}

}  // namespace

std::vector<CheckReport> check_conditional_densities(ConditionalCase which, std::size_t M, std::uint64_t seed) {
  if (M < 1) throw InvalidArgument("check_conditional_densities: M >= 1");
  switch (which) {
    case ConditionalCase::circle_uniform: return circle_uniform(M, seed);
    case ConditionalCase::circle_pair: return circle_pair(M, seed);
    case ConditionalCase::cauchy_pair: return cauchy_pair(M, seed);
    case ConditionalCase::dixon_anderson: return dixon_anderson(M, seed);
  }
  throw InvalidArgument("check_conditional_densities: unknown case");
}

}  // namespace circbeta::verify
