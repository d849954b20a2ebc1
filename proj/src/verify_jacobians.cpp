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

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "circbeta/error.hpp"
#include "circbeta/linalg.hpp"
#include "circbeta/numeric.hpp"
#include "circbeta/verify.hpp"
#include "verify_support.hpp"

// Finite-difference certification of the eigen-coordinate Jacobians.
//
// Each forward map sends matrix parameters to (sorted eigenvalues or
// eigen-angles, first n-1 first-component moduli). It returns nullopt when
// the image comes within kMinGap of a sorting boundary, which would make
// the central difference meaningless; the base point is then redrawn.

namespace circbeta::verify {

using detail::kTwoPi;
using detail::uniform;

namespace {

constexpr double kMinGap = 1e-3;
constexpr double kRelStep = 1e-6;
constexpr int kMaxRetries = 10;
constexpr double kJacobianTolerance = 1e-5;

using Image = std::optional<std::vector<double>>;
using ForwardMap = std::function<Image(const std::vector<double>&)>;

bool gaps_ok(const std::vector<double>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (std::abs(sorted[i] - sorted[i - 1]) < kMinGap) return false;
  return true;
}

Image tridiagonal_map(std::size_t n, const std::vector<double>& p) {
  std::vector<double> a(p.begin(), p.begin() + static_cast<long>(n));
  std::vector<double> b(p.begin() + static_cast<long>(n), p.end());
  for (double v : b)
    if (!(v > 0.0)) return std::nullopt;
  const auto eig = linalg::eigen_symmetric_tridiag(linalg::TridiagonalMatrix::jacobi(a, b));
  if (!gaps_ok(eig.eigenvalues)) return std::nullopt;
  std::vector<double> out = eig.eigenvalues;
  out.insert(out.end(), eig.first_components.begin(), eig.first_components.end() - 1);
  return out;
}

double tridiagonal_closed(std::size_t n, const std::vector<double>& p) {
  const auto eig = linalg::eigen_symmetric_tridiag(linalg::TridiagonalMatrix::jacobi(
      {p.begin(), p.begin() + static_cast<long>(n)}, {p.begin() + static_cast<long>(n), p.end()}));
  double value = 1.0 / eig.first_components.back();
  for (std::size_t i = n; i < p.size(); ++i) value *= p[i];
  for (double q : eig.first_components) value /= q;
  return value;
}

std::vector<cplx> unitary_alphas(std::size_t n, const std::vector<double>& p) {
  std::vector<cplx> alphas;
  for (std::size_t j = 0; j + 1 < n; ++j) alphas.emplace_back(p[2 * j], p[2 * j + 1]);
  alphas.push_back(std::polar(1.0, p.back()));
  return alphas;
}

std::optional<linalg::UnitEigenData> unitary_eig(std::size_t n, const std::vector<double>& p) {
  const auto alphas = unitary_alphas(n, p);
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (!(std::abs(alphas[j]) < 1.0)) return std::nullopt;
  try {
    auto eig = linalg::eigen_unit(linalg::build_hessenberg(linalg::SchurParameters(alphas)));
    if (eig.angles.front() < kMinGap || eig.angles.back() > kTwoPi - kMinGap || !gaps_ok(eig.angles))
      return std::nullopt;
    return eig;
  } catch (const DegenerateSpectrum&) {
    return std::nullopt;
  }
}

Image unitary_map(std::size_t n, const std::vector<double>& p) {
  const auto eig = unitary_eig(n, p);
  if (!eig) return std::nullopt;
  std::vector<double> out = eig->angles;
  const auto q = eig->moduli();
  out.insert(out.end(), q.begin(), q.end() - 1);
  return out;
}

double unitary_closed(std::size_t n, const std::vector<double>& p) {
  const auto eig = unitary_eig(n, p);
  if (!eig) return std::numeric_limits<double>::quiet_NaN();
  const auto alphas = unitary_alphas(n, p);
  const auto q = eig->moduli();
  double value = 1.0 / q.back();
  for (std::size_t i = 0; i + 1 < n; ++i) value *= 1.0 - std::norm(alphas[i]);
  for (double v : q) value /= v;
  return value;
}

// Upper-half angles and q_j = sqrt(2 w_j) of the real orthogonal matrix.
std::optional<std::pair<std::vector<double>, std::vector<double>>> real_orthogonal_eig(std::size_t n,
                                                                                     const std::vector<double>& p) {
  for (double v : p)
    if (!(std::abs(v) < 1.0)) return std::nullopt;
  linalg::UnitEigenData eig;
  try {
    eig = linalg::eigen_unit(linalg::build_real_orthogonal(linalg::RealSchurParameters(p)));
  } catch (const DegenerateSpectrum&) {
    return std::nullopt;
  }
  std::vector<double> theta;
  std::vector<double> q;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    if (eig.angles[j] < std::numbers::pi) {
      theta.push_back(eig.angles[j]);
      q.push_back(std::sqrt(2.0 * eig.weights[j]));
    }
  }
  if (theta.size() != n || theta.front() < kMinGap || theta.back() > std::numbers::pi - kMinGap || !gaps_ok(theta))
    return std::nullopt;
  return std::make_pair(theta, q);
}

Image real_orthogonal_map(std::size_t n, const std::vector<double>& p) {
  const auto e = real_orthogonal_eig(n, p);
  if (!e) return std::nullopt;
  std::vector<double> out = e->first;
  out.insert(out.end(), e->second.begin(), e->second.end() - 1);
  return out;
}

double real_orthogonal_closed(std::size_t n, const std::vector<double>& p) {
  const auto e = real_orthogonal_eig(n, p);
  if (!e) return std::numeric_limits<double>::quiet_NaN();
  const auto& q = e->second;
  double value = std::pow(2.0, static_cast<double>(n) - 1.0) / q.back();
  for (double v : q) value /= v;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double alt = k % 2 == 0 ? p[k] : -p[k];
    value *= (1.0 - p[k] * p[k]) / std::sqrt((1.0 - p[k]) * (1.0 + alt));
  }
  return value;
}

std::optional<double> fd_abs_det(const ForwardMap& f, const std::vector<double>& x) {
  const auto base = f(x);
  if (!base || base->size() != x.size()) return std::nullopt;
  const auto dim = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd jac(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const double h = kRelStep * std::max(1.0, std::abs(x[ku]));
    auto xp = x;
    auto xm = x;
    xp[ku] += h;
    xm[ku] -= h;
    const auto fp = f(xp);
    const auto fm = f(xm);
    if (!fp || !fm) return std::nullopt;
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto ru = static_cast<std::size_t>(r);
      jac(r, k) = ((*fp)[ru] - (*fm)[ru]) / (2.0 * h);
    }
  }
  return std::abs(Eigen::FullPivLU<Eigen::MatrixXd>(jac).determinant());
}

std::vector<double> random_base_point(JacobianCase which, std::size_t n, dist::RngStream& rng) {
  std::vector<double> p;
  switch (which) {
    case JacobianCase::tridiagonal:
      for (std::size_t i = 0; i < n; ++i) p.push_back(uniform(rng, -1.0, 1.0));
      for (std::size_t i = 0; i + 1 < n; ++i) p.push_back(uniform(rng, 0.5, 1.5));
      break;
    case JacobianCase::unitary:
      for (std::size_t j = 0; j + 1 < n; ++j) {
        const cplx a = detail::random_disk(rng, 0.7);
        p.push_back(a.real());
        p.push_back(a.imag());
      }
      p.push_back(rng.uniform_angle());
      break;
    case JacobianCase::real_orthogonal:
      for (std::size_t k = 0; k + 1 < 2 * n; ++k) p.push_back(uniform(rng, -0.6, 0.6));
      break;
  }
  return p;
}

std::string case_name(JacobianCase which) {
  switch (which) {
    case JacobianCase::tridiagonal: return "tridiagonal";
    case JacobianCase::unitary: return "unitary";
    case JacobianCase::real_orthogonal: return "real_orthogonal";
  }
  return "unknown";
}

}  // namespace

CheckReport check_jacobians(JacobianCase which, std::size_t n, std::size_t trials, dist::RngStream& rng) {
  if (n < 2 || n > 3) throw InvalidArgument("check_jacobians: n must be 2 or 3");
  CheckReport report("jacobians/" + case_name(which), kJacobianTolerance);
  ForwardMap f;
  std::function<double(const std::vector<double>&)> closed;
  switch (which) {
    case JacobianCase::tridiagonal:
      f = [n](const std::vector<double>& p) { return tridiagonal_map(n, p); };
      closed = [n](const std::vector<double>& p) { return tridiagonal_closed(n, p); };
      break;
    case JacobianCase::unitary:
      f = [n](const std::vector<double>& p) { return unitary_map(n, p); };
      closed = [n](const std::vector<double>& p) { return unitary_closed(n, p); };
      break;
    case JacobianCase::real_orthogonal:
      f = [n](const std::vector<double>& p) { return real_orthogonal_map(n, p); };
      closed = [n](const std::vector<double>& p) { return real_orthogonal_closed(n, p); };
      break;
  }
  const std::string label = which == JacobianCase::real_orthogonal ? "2n=" + std::to_string(2 * n)
                                                                   : "n=" + std::to_string(n);
  int total_retries = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    double err = std::numeric_limits<double>::quiet_NaN();
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
      const auto x = random_base_point(which, n, rng);
      const auto det = fd_abs_det(f, x);
      if (!det || !(*det > 0.0)) {
        ++total_retries;
        continue;
      }
      // The closed form is the Jacobian of the inverse map.
      err = num::relative_error(1.0 / *det, closed(x));
      break;
    }
    report.record(err, label);
  }
  if (total_retries > 0) report.note = "base points redrawn: " + std::to_string(total_retries);
  return report;
}

}  // namespace circbeta::verify
