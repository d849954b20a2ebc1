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
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "circbeta/error.hpp"
#include "circbeta/linalg.hpp"
#include "circbeta/numeric.hpp"
#include "circbeta/polynomials.hpp"
#include "circbeta/verify.hpp"
#include "verify_support.hpp"

namespace circbeta::verify {

using detail::kTwoPi;
using detail::uniform;
using detail::unit_diff;
using num::relative_error;

namespace {

constexpr double kIdentityTolerance = 1e-8;

double complex_rel(cplx a, cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string size_label(std::size_t n) { return "n=" + std::to_string(n); }

linalg::TridiagonalMatrix random_jacobi(dist::RngStream& rng, std::size_t n) {
  std::vector<double> a(n);
  std::vector<double> b(n - 1);
  for (auto& v : a) v = uniform(rng, -1.5, 1.5);
  for (auto& v : b) v = uniform(rng, 0.3, 1.2);
  return linalg::TridiagonalMatrix::jacobi(std::move(a), std::move(b));
}

std::vector<double> random_real_schur(dist::RngStream& rng, std::size_t half) {
  std::vector<double> a(2 * half - 1);
  for (auto& v : a) v = uniform(rng, -0.9, 0.9);
  return a;
}

// Upper-half-plane eigen-angles of a real orthogonal matrix and q_j^2 = 2 w_j.
struct HalfSpectrum {
  std::vector<double> theta;
  std::vector<double> q2;
};

HalfSpectrum upper_half(const linalg::UnitEigenData& eig) {
  HalfSpectrum h;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    if (eig.angles[j] < std::numbers::pi) {
      h.theta.push_back(eig.angles[j]);
      h.q2.push_back(2.0 * eig.weights[j]);
    }
  }
  if (2 * h.theta.size() != eig.size()) throw InternalConsistency("real orthogonal spectrum is not paired");
  return h;
}

cplx random_shift_off_circle(dist::RngStream& rng) {
  const double r = rng.uniform01() < 0.5 ? uniform(rng, 0.2, 0.7) : uniform(rng, 1.3, 3.0);
  return std::polar(r, rng.uniform_angle());
}

}  // namespace

std::vector<CheckReport> check_resolvent(std::size_t n, std::size_t trials, dist::RngStream& rng) {
  if (n < 1) throw InvalidArgument("check_resolvent: n >= 1");
  CheckReport tri("resolvent/tridiagonal", kIdentityTolerance);
  CheckReport uni("resolvent/unitary_hessenberg", kIdentityTolerance);
  CheckReport ro("resolvent/real_orthogonal_half_sum", kIdentityTolerance);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    {
      const auto t = random_jacobi(rng, n);
      const auto eig = linalg::eigen_symmetric_tridiag(t);
      const cplx shift{uniform(rng, -2.0, 2.0), uniform(rng, 0.1, 1.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0)};
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        sum += eig.first_components[j] * eig.first_components[j] / (eig.eigenvalues[j] - shift);
      tri.record(complex_rel(linalg::resolvent_11(t.to_complex(), shift), sum), size_label(n));
    }
    {
      const auto h = linalg::build_hessenberg(linalg::SchurParameters(detail::random_schur(rng, n)));
      const auto eig = linalg::eigen_unit(h);
      const cplx shift = random_shift_off_circle(rng);
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += eig.weights[j] / (std::polar(1.0, eig.angles[j]) - shift);
      uni.record(complex_rel(linalg::resolvent_11(h, shift), sum), size_label(n));
    }
    {
      const auto h = linalg::build_real_orthogonal(linalg::RealSchurParameters(random_real_schur(rng, n)));
      const auto half = upper_half(linalg::eigen_unit(h));
      const cplx x = detail::random_disk(rng, 0.8);
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const cplx lam = std::polar(1.0, half.theta[j]);
        sum += 0.5 * half.q2[j] * (1.0 / (1.0 - x * lam) + 1.0 / (1.0 - x * std::conj(lam)));
      }
      ro.record(complex_rel(linalg::resolvent_11_reciprocal(h, x), sum), size_label(2 * n));
    }
  }
  return {tri, uni, ro};
}

std::vector<CheckReport> check_product_identities(std::size_t n, std::size_t trials, dist::RngStream& rng) {
  if (n < 1) throw InvalidArgument("check_product_identities: n >= 1");
  CheckReport disc_tri("product_identities/tridiagonal_discriminant", kIdentityTolerance);
  CheckReport disc_uni("product_identities/hessenberg_discriminant", kIdentityTolerance);
  CheckReport minor("product_identities/bottom_minor_product", kIdentityTolerance);
  CheckReport disc_ro("product_identities/real_orthogonal_discriminant", kIdentityTolerance);
  CheckReport ends_ro("product_identities/real_orthogonal_endpoint_products", kIdentityTolerance);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    {
      const auto t = random_jacobi(rng, n);
      const auto eig = linalg::eigen_symmetric_tridiag(t);
      double lhs = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) lhs *= std::pow(eig.eigenvalues[i] - eig.eigenvalues[j], 2);
      double rhs = 1.0;
      for (std::size_t i = 1; i < n; ++i) rhs *= std::pow(t.offdiag()[i - 1], 2.0 * static_cast<double>(i));
      for (double q : eig.first_components) rhs /= q * q;
      disc_tri.record(relative_error(lhs, rhs), size_label(n));
    }
    {
      const auto alphas = detail::random_schur(rng, n);
      const auto eig = linalg::eigen_unit(linalg::build_hessenberg(linalg::SchurParameters(alphas)));
      double vd = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) vd *= std::norm(unit_diff(eig.angles[i], eig.angles[j]));
      double rho_prod = 1.0;
      for (std::size_t l = 0; l + 1 < n; ++l)
        rho_prod *= std::pow(1.0 - std::norm(alphas[l]), static_cast<double>(n - 1 - l));
      double wprod = 1.0;
      for (double w : eig.weights) wprod *= w;
      disc_uni.record(relative_error(vd, rho_prod / wprod), size_label(n));

      const auto chi_b = poly::bottom_run(alphas).chi;
      double minors = 1.0;
      for (double th : eig.angles) minors *= std::abs(chi_b(std::polar(1.0, th)));
      minor.record(relative_error(minors, rho_prod), size_label(n));
    }
    {
      const auto a = random_real_schur(rng, n);
      const auto half =
          upper_half(linalg::eigen_unit(linalg::build_real_orthogonal(linalg::RealSchurParameters(a))));
      double lhs = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        lhs *= std::abs(unit_diff(half.theta[i], -half.theta[i]));
        for (std::size_t j = i + 1; j < n; ++j)
          lhs *= std::norm(unit_diff(half.theta[i], half.theta[j])) *
                 std::norm(unit_diff(half.theta[i], -half.theta[j]));
      }
      double rhs = std::pow(2.0, static_cast<double>(n));
      const std::size_t m = a.size();  // 2n - 1
      for (std::size_t l = 0; l < m; ++l) rhs *= std::pow(1.0 - a[l] * a[l], 0.5 * static_cast<double>(m - l));
      for (double q2 : half.q2) rhs /= q2;
      disc_ro.record(relative_error(lhs, rhs), size_label(2 * n));

      double minus = 1.0;
      double plus = 1.0;
      for (double th : half.theta) {
        minus *= 4.0 * std::pow(std::sin(0.5 * th), 2);
        plus *= 4.0 * std::pow(std::cos(0.5 * th), 2);
      }
      double minus_rhs = 2.0;
      double plus_rhs = 2.0;
      for (std::size_t k = 0; k < m; ++k) {
        minus_rhs *= 1.0 - a[k];
        plus_rhs *= 1.0 + (k % 2 == 0 ? a[k] : -a[k]);
      }
      ends_ro.record(std::max(relative_error(minus, minus_rhs), relative_error(plus, plus_rhs)), size_label(2 * n));
    }
  }
  return {disc_tri, disc_uni, minor, disc_ro, ends_ro};
}

namespace {

// (-1)^{(n-1)(n-2)/2}: the orientation of the confluent column blocks.
double confluent_sign(std::size_t n) { return ((n - 1) * (n - 2) / 2) % 2 == 0 ? 1.0 : -1.0; }

std::vector<double> random_unimodular_angles(dist::RngStream& rng, std::size_t n, double min_gap) {
  for (;;) {
    auto th = detail::separated_points(rng, n, 0.0, kTwoPi, min_gap);
    if (th.front() + kTwoPi - th.back() >= min_gap) return th;
  }
}

}  // namespace

std::vector<CheckReport> check_det_identities(std::size_t n, std::size_t trials, dist::RngStream& rng) {
  if (n < 1 || n > 6) throw InvalidArgument("check_det_identities: 1 <= n <= 6");
  CheckReport real_conf("det_identities/real_confluent", kIdentityTolerance);
  CheckReport unit_conf("det_identities/unimodular_confluent", kIdentityTolerance);
  CheckReport inv_anti("det_identities/inversion_antisymmetric", kIdentityTolerance);
  inv_anti.note = "first block read as l_k^j + l_k^-j - (l_n^j + l_n^-j); the literal reading is identically zero";
  const auto dim = static_cast<Eigen::Index>(2 * n - 1);
  const double sign = confluent_sign(n);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    {
      const auto l = detail::separated_points(rng, n, -1.5, 1.5, 0.2);
      Eigen::MatrixXd m(dim, dim);
      for (Eigen::Index j = 1; j <= dim; ++j) {
        const double jj = static_cast<double>(j);
        for (std::size_t k = 0; k + 1 < n; ++k) m(j - 1, static_cast<Eigen::Index>(k)) = std::pow(l[k], jj) - std::pow(l[n - 1], jj);
        for (std::size_t k = 0; k < n; ++k)
          m(j - 1, static_cast<Eigen::Index>(n - 1 + k)) = jj * std::pow(l[k], jj - 1.0);
      }
      double rhs = sign;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) rhs *= std::pow(l[k] - l[j], 4);
      real_conf.record(relative_error(Eigen::FullPivLU<Eigen::MatrixXd>(m).determinant(), rhs), size_label(n));
    }
    {
      const auto th = random_unimodular_angles(rng, n, 0.3);
      std::vector<cplx> l(n);
      for (std::size_t k = 0; k < n; ++k) l[k] = std::polar(1.0, th[k]);
      // Rows: powers +1..+(n-1), then -1..-(n-1), then +n.
      std::vector<std::pair<int, int>> rows;
      for (int j = 1; j < static_cast<int>(n); ++j) rows.emplace_back(j, 1);
      for (int j = 1; j < static_cast<int>(n); ++j) rows.emplace_back(j, -1);
      rows.emplace_back(static_cast<int>(n), 1);
      Eigen::MatrixXcd m(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        const auto [j, s] = rows[static_cast<std::size_t>(r)];
        const int p = s * j;
        for (std::size_t k = 0; k + 1 < n; ++k) m(r, static_cast<Eigen::Index>(k)) = std::pow(l[k], p) - std::pow(l[n - 1], p);
        for (std::size_t k = 0; k < n; ++k)
          m(r, static_cast<Eigen::Index>(n - 1 + k)) = static_cast<double>(p) * std::pow(l[k], p);
      }
      cplx rhs = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        rhs /= std::pow(l[j], static_cast<int>(2 * n) - 3);
        for (std::size_t k = j + 1; k < n; ++k) rhs *= std::pow(unit_diff(th[k], th[j]), 4);
      }
      unit_conf.record(complex_rel(Eigen::FullPivLU<Eigen::MatrixXcd>(m).determinant(), rhs), size_label(n));
    }
    {
      const auto th = detail::separated_points(rng, n, 0.1, std::numbers::pi - 0.1, 0.3);
      std::vector<cplx> l(n);
      for (std::size_t k = 0; k < n; ++k) l[k] = std::polar(1.0, th[k]);
      Eigen::MatrixXcd m(dim, dim);
      for (Eigen::Index j = 1; j <= dim; ++j) {
        const int p = static_cast<int>(j);
        const cplx ref = std::pow(l[n - 1], p) + std::pow(l[n - 1], -p);
        for (std::size_t k = 0; k + 1 < n; ++k)
          m(j - 1, static_cast<Eigen::Index>(k)) = std::pow(l[k], p) + std::pow(l[k], -p) - ref;
        for (std::size_t k = 0; k < n; ++k)
          m(j - 1, static_cast<Eigen::Index>(n - 1 + k)) = static_cast<double>(p) * (std::pow(l[k], p) - std::pow(l[k], -p));
      }
      cplx rhs = sign;
      for (std::size_t j = 0; j < n; ++j) {
        rhs *= unit_diff(th[j], -th[j]);
        for (std::size_t k = j + 1; k < n; ++k) {
          const cplx f = unit_diff(th[k], th[j]) * unit_diff(-th[k], -th[j]) * unit_diff(th[j], -th[k]) *
                         unit_diff(-th[j], th[k]);
          rhs *= f * f;
        }
      }
      inv_anti.record(complex_rel(Eigen::FullPivLU<Eigen::MatrixXcd>(m).determinant(), rhs), size_label(n));
    }
  }
  return {real_conf, unit_conf, inv_anti};
}

std::vector<CheckReport> check_interlace_relations(std::size_t n, std::size_t trials, dist::RngStream& rng) {
  if (n < 1) throw InvalidArgument("check_interlace_relations: n >= 1");
  CheckReport residues("interlace/residues", kIdentityTolerance);
  CheckReport product("interlace/product", kIdentityTolerance);
  CheckReport ordering("interlace/ordering", 0.0, Metric::violations);
  CheckReport continuity("interlace/continuity", 1e-3, Metric::abs_error);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    linalg::UnitEigenData eig;
    eig.angles = random_unimodular_angles(rng, n, 1e-3);
    eig.weights = dist::dirichlet(std::vector<double>(n, 1.0), rng).w;
    const double phi = rng.uniform_angle();
    const cplx t = std::polar(1.0, phi);
    const auto ps = poly::perturbed_spectrum(eig, t);
    const auto& th = eig.angles;
    const auto& psi = ps.new_angles;

    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx lhs = -(t - 1.0) * std::polar(1.0, th[j]) * eig.weights[j];
      cplx rhs = 1.0;
      for (std::size_t l = 0; l < n; ++l) {
        rhs *= unit_diff(th[j], psi[l]);
        if (l != j) rhs /= unit_diff(th[j], th[l]);
      }
      worst = std::max(worst, complex_rel(lhs, rhs));
    }
    residues.record(worst, size_label(n));

    double sum_psi = 0.0;
    double sum_theta = phi;
    for (std::size_t j = 0; j < n; ++j) {
      sum_psi += psi[j];
      sum_theta += th[j];
    }
    product.record(std::abs(unit_diff(sum_psi, sum_theta)), size_label(n));

    // psi_i must sit in the cyclic gap (theta_{i-1}, theta_i).
    bool ok = poly::cyclically_interlaced(th, psi);
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (i == 0) {
        ok = n == 1 ? psi[0] != th[0] : (psi[0] > th[n - 1] || psi[0] < th[0]);
      } else {
        ok = psi[i] > th[i - 1] && psi[i] < th[i];
      }
    }
    ordering.record(ok ? 0.0 : 1.0, size_label(n));

    double drift = 0.0;
    for (double small : {1e-4, -1e-4}) {
      const auto near = poly::perturbed_spectrum(eig, std::polar(1.0, small));
      for (double p : near.new_angles) {
        double best = kTwoPi;
        for (double a : th) best = std::min(best, std::abs(unit_diff(p, a)));
        drift = std::max(drift, best);
      }
    }
    continuity.record(drift, size_label(n));
  }
  return {residues, product, ordering, continuity};
}

}  // namespace circbeta::verify
