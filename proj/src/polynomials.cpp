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

#include "circbeta/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "circbeta/error.hpp"

namespace circbeta::poly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitCircleTolerance = 1e-6;
constexpr double kRealRootTolerance = 1e-6;

using Coeffs = std::vector<cplx>;

Coeffs shift_up(const Coeffs& p) {
  Coeffs out(p.size() + 1, cplx{});
  std::copy(p.begin(), p.end(), out.begin() + 1);
  return out;
}

Coeffs padded(const Coeffs& p, std::size_t size) {
  Coeffs out(p);
  out.resize(size, cplx{});
  return out;
}

// One step of the coupled recurrence with parameter a = alpha_{k-1}.
void szego_step(Coeffs& chi, Coeffs& chi_tilde, cplx a) {
  const std::size_t size = chi.size() + 1;
  const Coeffs z_chi = shift_up(chi);
  const Coeffs tilde = padded(chi_tilde, size);
  Coeffs next_chi(size), next_tilde(size);
  for (std::size_t j = 0; j < size; ++j) {
    next_chi[j] = z_chi[j] - std::conj(a) * tilde[j];
    next_tilde[j] = tilde[j] - a * z_chi[j];
  }
  chi = std::move(next_chi);
  chi_tilde = std::move(next_tilde);
}

SzegoPair run_recurrence(const std::vector<cplx>& params, cplx init) {
  Coeffs chi{cplx{1.0, 0.0}};
  Coeffs chi_tilde{init};
  for (const cplx a : params) szego_step(chi, chi_tilde, a);
  return SzegoPair{PolynomialC(chi), PolynomialC(chi_tilde), params.size(), init};
}

}  // namespace

PolynomialC::PolynomialC(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("PolynomialC: no coefficients");
  double scale = 0.0;
  for (const cplx c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidArgument("PolynomialC: non-finite coefficient");
    scale = std::max(scale, std::abs(c));
  }
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= 1e-14 * scale) coeffs_.pop_back();
}

PolynomialC PolynomialC::from_roots(const std::vector<cplx>& roots) {
  Coeffs c{cplx{1.0, 0.0}};
  for (const cplx r : roots) {
    Coeffs next = shift_up(c);
    for (std::size_t j = 0; j < c.size(); ++j) next[j] -= r * c[j];
    c = std::move(next);
  }
  return PolynomialC(std::move(c));
}

cplx PolynomialC::operator()(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx PolynomialC::derivative(cplx z) const {
  cplx acc{};
  for (std::size_t j = coeffs_.size() - 1; j >= 1; --j) acc = acc * z + static_cast<double>(j) * coeffs_[j];
  return acc;
}

SzegoPair szego_run(const std::vector<cplx>& alphas, cplx init) { return run_recurrence(alphas, init); }

SzegoPair bottom_run(const std::vector<cplx>& alphas) {
  if (alphas.empty()) throw InvalidArgument("bottom_run: no parameters");
  return bottom_run(alphas, alphas.size() - 1);
}

SzegoPair bottom_run(const std::vector<cplx>& alphas, std::size_t steps) {
  const std::size_t n = alphas.size();
  if (n == 0 || steps > n) throw InvalidArgument("bottom_run: steps exceed dimension");
  const cplx last = alphas[n - 1];
  std::vector<cplx> substituted;
  for (std::size_t k = 1; k <= steps; ++k) {
    const cplx a = (k == n) ? cplx{-1.0, 0.0} : alphas[n - 1 - k];
    substituted.push_back(-std::conj(a) * last);
  }
  return run_recurrence(substituted, cplx{1.0, 0.0});
}

PolynomialC three_term_step(const PolynomialC& p_curr, const PolynomialC& p_prev, double b, double c) {
  if (!(b > 0.0 && b <= 1.0)) throw InvalidArgument("three_term_step: b must lie in (0, 1]");
  if (!std::isfinite(c)) throw InvalidArgument("three_term_step: non-finite c");
  const std::size_t n = p_curr.degree();
  if (n == 0 && b != 1.0) throw InvalidArgument("three_term_step: first step requires b = 1");
  if (n > 0 && p_prev.degree() + 1 != n) throw InvalidArgument("three_term_step: p_prev must have degree n-1");
  const Coeffs& cur = p_curr.coeffs();
  Coeffs out(n + 2, cplx{});
  for (std::size_t k = 0; k <= n + 1; ++k) {
    cplx v{};
    if (k >= 1) v += cur[k - 1];
    if (k <= n) v -= c * cur[k];
    out[k] = v / b;
  }
  if (n > 0) {
    const double w = 1.0 - 1.0 / b;
    const Coeffs& prev = p_prev.coeffs();
    for (std::size_t k = 0; k < prev.size(); ++k) {
      out[k] += w * prev[k];
      out[k + 2] += w * prev[k];
    }
  }
  // 1/b + (1 - 1/b) = 1 exactly.
  out[n + 1] = cplx{1.0, 0.0};
  return PolynomialC(std::move(out));
}

CauchyRecurrenceState::CauchyRecurrenceState(double gamma_, double d_)
    : p_prev(PolynomialC::one()), p_curr(PolynomialC::one()), gamma(gamma_), d(d_) {}

void CauchyRecurrenceState::advance(double b, double c) {
  PolynomialC next = three_term_step(p_curr, p_prev, b, c);
  p_prev = std::move(p_curr);
  p_curr = std::move(next);
  ++n;
  draws.push_back({b, c});
}

std::vector<cplx> companion_roots(const PolynomialC& p) {
  const std::size_t d = p.degree();
  if (d == 0) throw InvalidArgument("companion_roots: polynomial has no roots (degree 0 or zero polynomial)");
  const auto& c = p.coeffs();
  if (d == 1) return {-c[0] / c[1]};
  const auto di = static_cast<Eigen::Index>(d);
  CMatrix companion = CMatrix::Zero(di, di);
  for (Eigen::Index i = 1; i < di; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < di; ++i) companion(i, di - 1) = -c[static_cast<std::size_t>(i)] / c[d];
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw InternalConsistency("companion_roots: eigensolver failed");
  std::vector<cplx> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + d);

  // Newton refinement, limited to a tenth of the distance to the nearest
  // other root so clustered roots cannot swap.
  for (std::size_t k = 0; k < d; ++k) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) nearest = std::min(nearest, std::abs(roots[j] - roots[k]));
    cplx r = roots[k];
    double fr = std::abs(p(r));
    for (int it = 0; it < 3 && fr > 0.0; ++it) {
      const cplx dp = p.derivative(r);
      if (dp == cplx{}) break;
      const cplx step = p(r) / dp;
      if (std::abs(step) > 0.1 * nearest) break;
      const cplx candidate = r - step;
      const double fc = std::abs(p(candidate));
      if (!(fc < fr)) break;
      r = candidate;
      fr = fc;
    }
    roots[k] = r;
  }
  return roots;
}

CircleRoots unit_circle_angles(const PolynomialC& p) {
  CircleRoots out{{}, 0.0};
  for (const cplx r : companion_roots(p)) {
    const double deviation = std::abs(std::abs(r) - 1.0);
    if (deviation > kUnitCircleTolerance)
      throw NotUnimodular("unit_circle_angles: root of modulus " + std::to_string(std::abs(r)), std::abs(r));
    out.max_radial_deviation = std::max(out.max_radial_deviation, deviation);
    out.angles.push_back(linalg::wrap_angle(std::arg(r)));
  }
  std::sort(out.angles.begin(), out.angles.end());
  return out;
}

RealRoots real_roots_sorted(const PolynomialC& p) {
  RealRoots out{{}, 0.0};
  for (const cplx r : companion_roots(p)) {
    const double im = std::abs(r.imag());
    if (im > kRealRootTolerance)
      throw NotRealRooted("real_roots_sorted: root with imaginary part " + std::to_string(r.imag()), r.imag());
    out.max_abs_imag = std::max(out.max_abs_imag, im);
    out.roots.push_back(r.real());
  }
  std::sort(out.roots.begin(), out.roots.end(), std::greater<>());
  return out;
}

cplx perturbation_function(const linalg::UnitEigenData& eig, cplx t, cplx z) {
  cplx sum{};
  for (std::size_t j = 0; j < eig.size(); ++j) {
    const cplx lambda = std::polar(1.0, eig.angles[j]);
    sum += eig.weights[j] * lambda / (lambda - z);
  }
  return 1.0 + (t - 1.0) * sum;
}

InterlacedSpectrum perturbed_spectrum(const linalg::UnitEigenData& eig, cplx t) {
  const std::size_t n = eig.size();
  if (n == 0 || eig.weights.size() != n) throw InvalidArgument("perturbed_spectrum: malformed eigen data");
  if (std::abs(std::abs(t) - 1.0) > 1e-12) throw InvalidArgument("perturbed_spectrum: |t| != 1");
  for (double w : eig.weights)
    if (!(w > 0.0)) throw InvalidArgument("perturbed_spectrum: weights must be strictly positive");
  for (std::size_t j = 1; j < n; ++j)
    if (!(eig.angles[j] > eig.angles[j - 1])) throw InvalidArgument("perturbed_spectrum: angles not increasing");

  InterlacedSpectrum out{eig.angles, {}, t};
  if (std::abs(t - 1.0) <= 1e-15) {
    out.new_angles = eig.angles;
    return out;
  }
  const double phi = std::arg(t);
  const double cot_half_phi = std::cos(0.5 * phi) / std::sin(0.5 * phi);

  // In gap i, psi = lower + u with u in (0, upper - lower); the secular
  // function g(u) = cot(phi/2) - sum_j w_j cot((psi - theta_j)/2) increases
  // from -inf to +inf across the gap.
  for (std::size_t i = 0; i < n; ++i) {
    const double lower = (i == 0) ? eig.angles[n - 1] - kTwoPi : eig.angles[i - 1];
    const double upper = eig.angles[i];
    const double width = upper - lower;
    std::vector<double> offsets(n);
    for (std::size_t j = 0; j < n; ++j) offsets[j] = lower - eig.angles[j];
    auto g = [&](double u) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double half = 0.5 * (u + offsets[j]);
        s += eig.weights[j] * std::cos(half) / std::sin(half);
      }
      return cot_half_phi - s;
    };
    auto dg = [&](double u) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double sh = std::sin(0.5 * (u + offsets[j]));
        s += eig.weights[j] / (2.0 * sh * sh);
      }
      return s;
    };
    double lo = 0.0;
    double hi = width;
    for (int it = 0; it < 50; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (g(mid) < 0.0) lo = mid; else hi = mid;
    }
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 5; ++it) {
      const double step = g(u) / dg(u);
      const double next = u - step;
      if (!(next > lo && next < hi)) break;
      u = next;
      if (std::abs(step) <= 1e-12 * std::max(1.0, std::abs(u))) break;
    }
    out.new_angles.push_back(linalg::wrap_angle(lower + u));
  }
  return out;
}

bool cyclically_interlaced(std::vector<double> first, std::vector<double> second) {
  if (first.size() != second.size() || first.empty()) return false;
  std::vector<std::pair<double, int>> merged;
  for (double a : first) merged.emplace_back(linalg::wrap_angle(a), 0);
  for (double a : second) merged.emplace_back(linalg::wrap_angle(a), 1);
  std::sort(merged.begin(), merged.end());
  const std::size_t m = merged.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto& cur = merged[k];
    const auto& next = merged[(k + 1) % m];
    if (cur.second == next.second) return false;
    if (k + 1 < m && !(next.first > cur.first)) return false;
  }
  return true;
}

bool InterlacedRealSpectrum::is_strictly_interlaced() const {
  if (x.size() != y.size() + 1) return false;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!(x[j] > y[j] && y[j] > x[j + 1])) return false;
  return true;
}

std::vector<double> cayley_angles(const std::vector<double>& x) {
  std::vector<double> out;
  out.reserve(x.size());
  // arg((x - i)/(x + i)) = -2 atan2(1, x), shifted into (0, 2pi].
  for (double v : x) out.push_back(kTwoPi - 2.0 * std::atan2(1.0, v));
  return out;
}

double inverse_cayley(double theta) { return -std::cos(0.5 * theta) / std::sin(0.5 * theta); }

}  // namespace circbeta::poly
