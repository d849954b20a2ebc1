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

#include "circbeta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "circbeta/error.hpp"

namespace circbeta::linalg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

// 1 - |z|^2 without cancellation near the circle.
double one_minus_abs2(cplx z) {
  const double r = std::abs(z);
  return (1.0 - r) * (1.0 + r);
}

// Signed distance from a to b going counter-clockwise, in (-pi, pi].
double cyclic_diff(double a, double b) {
  double d = std::fmod(b - a, kTwoPi);
  if (d > std::numbers::pi) d -= kTwoPi;
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

struct SchurEntry {
  double angle;
  double weight;
};

std::vector<SchurEntry> unit_schur_entries(const ComplexSquareMatrix& m) {
  if (!m.is_unitary()) throw InvalidArgument("eigen_unit: matrix is not tagged unitary");
  const CMatrix& a = m.matrix();
  Eigen::ComplexSchur<CMatrix> schur(a, true);
  if (schur.info() != Eigen::Success) throw InternalConsistency("eigen_unit: Schur iteration failed");
  const CMatrix& t = schur.matrixT();
  const CMatrix& z = schur.matrixU();
  std::vector<SchurEntry> out;
  out.reserve(m.size());
  for (Eigen::Index j = 0; j < a.rows(); ++j) {
    const cplx lambda = t(j, j);
    const double residual = (a * z.col(j) - lambda * z.col(j)).norm();
    if (residual > kResidualTolerance)
      throw InternalConsistency("eigen_unit: eigenvector residual " + std::to_string(residual));
    out.push_back({wrap_angle(std::arg(lambda)), std::norm(z(0, j))});
  }
  std::sort(out.begin(), out.end(), [](const SchurEntry& x, const SchurEntry& y) { return x.angle < y.angle; });
  return out;
}

}  // namespace

ComplexSquareMatrix::ComplexSquareMatrix(CMatrix entries, bool tag_unitary) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw InvalidArgument("ComplexSquareMatrix: expected a non-empty square matrix");
  if (!all_finite(m_)) throw InvalidArgument("ComplexSquareMatrix: non-finite entry");
  if (tag_unitary) {
    const double defect = unitarity_defect();
    if (defect > kUnitaryTolerance)
      throw InvalidArgument("ComplexSquareMatrix: unitarity defect " + std::to_string(defect));
    unitary_ = true;
  }
}

double ComplexSquareMatrix::unitarity_defect() const {
  const CMatrix g = m_.adjoint() * m_ - CMatrix::Identity(m_.rows(), m_.cols());
  return g.cwiseAbs().maxCoeff();
}

SchurParameters::SchurParameters(std::vector<cplx> alphas, bool unitary_boundary)
    : alphas_(std::move(alphas)), unitary_boundary_(unitary_boundary) {
  if (alphas_.empty()) throw InvalidArgument("SchurParameters: dimension 0");
  const std::size_t n = alphas_.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::abs(alphas_[j]);
    if (!std::isfinite(r)) throw InvalidArgument("SchurParameters: non-finite alpha");
    if (j + 1 < n && !(r < 1.0))
      throw InvalidArgument("SchurParameters: |alpha_" + std::to_string(j) + "| >= 1");
  }
  const double last = std::abs(alphas_.back());
  if (unitary_boundary_ && std::abs(last - 1.0) > 1e-12)
    throw InvalidArgument("SchurParameters: boundary alpha not on the unit circle");
  if (!unitary_boundary_ && !(last <= 1.0))
    throw InvalidArgument("SchurParameters: |alpha_{n-1}| > 1");
}

double SchurParameters::rho(std::size_t j) const { return std::sqrt(std::max(0.0, one_minus_abs2(alphas_[j]))); }

RealSchurParameters::RealSchurParameters(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty() || alphas_.size() % 2 == 0)
    throw InvalidArgument("RealSchurParameters: expected 2n-1 parameters");
  for (double a : alphas_)
    if (!(std::abs(a) < 1.0)) throw InvalidArgument("RealSchurParameters: |alpha_j| >= 1");
}

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> diag, std::vector<double> offdiag, bool strict)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty() || offdiag_.size() + 1 != diag_.size())
    throw InvalidArgument("TridiagonalMatrix: need n diagonal and n-1 off-diagonal entries");
  for (double b : offdiag_) {
    if (strict ? !(b > 0.0) : !(b >= 0.0))
      throw InvalidArgument("TridiagonalMatrix: off-diagonal entry out of range");
  }
}

TridiagonalMatrix TridiagonalMatrix::jacobi(std::vector<double> diag, std::vector<double> offdiag) {
  return TridiagonalMatrix(std::move(diag), std::move(offdiag), true);
}

TridiagonalMatrix TridiagonalMatrix::relaxed(std::vector<double> diag, std::vector<double> offdiag) {
  return TridiagonalMatrix(std::move(diag), std::move(offdiag), false);
}

Eigen::MatrixXd TridiagonalMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(diag_.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) t(r, r) = diag_[static_cast<std::size_t>(n - 1 - r)];
  for (Eigen::Index r = 0; r + 1 < n; ++r) {
    const double b = offdiag_[static_cast<std::size_t>(n - 2 - r)];
    t(r, r + 1) = b;
    t(r + 1, r) = b;
  }
  return t;
}

ComplexSquareMatrix TridiagonalMatrix::to_complex() const {
  return ComplexSquareMatrix(dense().cast<cplx>());
}

std::vector<double> UnitEigenData::moduli() const {
  std::vector<double> q(weights.size());
  std::transform(weights.begin(), weights.end(), q.begin(), [](double w) { return std::sqrt(w); });
  return q;
}

std::vector<cplx> UnitEigenData::eigenvalues() const {
  std::vector<cplx> out(angles.size());
  std::transform(angles.begin(), angles.end(), out.begin(), [](double a) { return std::polar(1.0, a); });
  return out;
}

double wrap_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r <= 0.0) r += kTwoPi;
  return r;
}

ComplexSquareMatrix build_hessenberg(const SchurParameters& params) {
  const std::size_t n = params.size();
  const auto ni = static_cast<Eigen::Index>(n);
  CMatrix h = CMatrix::Zero(ni, ni);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx left = -params.alpha(static_cast<long>(i) - 1);
    double rho_product = 1.0;
    for (std::size_t j = i; j < n; ++j) {
      if (j > i) rho_product *= params.rho(j - 1);
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = left * std::conj(params.alphas()[j]) * rho_product;
    }
    if (i + 1 < n) h(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = params.rho(i);
  }
  const bool unitary = std::abs(std::abs(params.alphas().back()) - 1.0) <= 1e-12;
  return ComplexSquareMatrix(std::move(h), unitary);
}

ComplexSquareMatrix build_real_orthogonal(const RealSchurParameters& params) {
  std::vector<cplx> alphas(params.alphas().begin(), params.alphas().end());
  alphas.emplace_back(-1.0, 0.0);
  return build_hessenberg(SchurParameters(std::move(alphas), true));
}

UnitEigenData eigen_unit(const ComplexSquareMatrix& m) {
  const auto entries = unit_schur_entries(m);
  UnitEigenData out;
  for (const auto& e : entries) {
    out.angles.push_back(e.angle);
    out.weights.push_back(e.weight);
  }
  const std::size_t n = entries.size();
  if (n > 1) {
    double min_gap = out.angles.front() + kTwoPi - out.angles.back();
    for (std::size_t j = 1; j < n; ++j) min_gap = std::min(min_gap, out.angles[j] - out.angles[j - 1]);
    if (min_gap <= kDegeneracyTolerance)
      throw DegenerateSpectrum("eigen_unit: eigen-angle gap " + std::to_string(min_gap));
  }
  return out;
}

UnitEigenData eigen_unit_paired(const ComplexSquareMatrix& m) {
  if (m.size() % 2 != 0) throw InvalidArgument("eigen_unit_paired: odd dimension");
  const auto entries = unit_schur_entries(m);
  const std::size_t n2 = entries.size();
  auto split_for = [&](std::size_t offset) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n2; k += 2) {
      const auto& a = entries[(k + offset) % n2];
      const auto& b = entries[(k + offset + 1) % n2];
      worst = std::max(worst, std::abs(cyclic_diff(a.angle, b.angle)));
    }
    return worst;
  };
  const double split0 = split_for(0);
  const double split1 = split_for(1);
  const std::size_t offset = split0 <= split1 ? 0 : 1;
  const double split = std::min(split0, split1);
  if (split > kPairMergeTolerance)
    throw InternalConsistency("eigen_unit_paired: eigen-angle pair split by " + std::to_string(split));
  std::vector<SchurEntry> merged;
  for (std::size_t k = 0; k < n2; k += 2) {
    const auto& a = entries[(k + offset) % n2];
    const auto& b = entries[(k + offset + 1) % n2];
    merged.push_back({wrap_angle(a.angle + 0.5 * cyclic_diff(a.angle, b.angle)), a.weight + b.weight});
  }
  std::sort(merged.begin(), merged.end(), [](const SchurEntry& x, const SchurEntry& y) { return x.angle < y.angle; });
  UnitEigenData out;
  for (const auto& e : merged) {
    out.angles.push_back(e.angle);
    out.weights.push_back(e.weight);
  }
  return out;
}

RealEigenData eigen_symmetric_tridiag(const TridiagonalMatrix& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  RealEigenData out;
  if (n == 1) {
    out.eigenvalues = {t.diag()[0]};
    out.first_components = {1.0};
    return out;
  }
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (Eigen::Index r = 0; r < n; ++r) diag(r) = t.diag()[static_cast<std::size_t>(n - 1 - r)];
  for (Eigen::Index r = 0; r + 1 < n; ++r) sub(r) = t.offdiag()[static_cast<std::size_t>(n - 2 - r)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw InternalConsistency("eigen_symmetric_tridiag: solver failed");
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    out.eigenvalues.push_back(solver.eigenvalues()(j));
    out.first_components.push_back(std::abs(solver.eigenvectors()(0, j)));
  }
  return out;
}

namespace {

cplx first_entry_of_inverse(const CMatrix& a) {
  Eigen::FullPivLU<CMatrix> lu(a);
  if (!lu.isInvertible()) throw SingularShift("resolvent: shifted matrix is singular");
  const Eigen::VectorXcd e1 = Eigen::VectorXcd::Unit(a.rows(), 0);
  const Eigen::VectorXcd x = lu.solve(e1);
  if (!std::isfinite(x(0).real()) || !std::isfinite(x(0).imag()))
    throw SingularShift("resolvent: non-finite solution");
  return x(0);
}

}  // namespace

cplx resolvent_11(const ComplexSquareMatrix& m, cplx shift) {
  const auto n = m.matrix().rows();
  return first_entry_of_inverse(m.matrix() - shift * CMatrix::Identity(n, n));
}

cplx resolvent_11_reciprocal(const ComplexSquareMatrix& m, cplx x) {
  const auto n = m.matrix().rows();
  return first_entry_of_inverse(CMatrix::Identity(n, n) - x * m.matrix());
}

ComplexSquareMatrix rank1_row_scale(const ComplexSquareMatrix& m, cplx t) {
  if (std::abs(std::abs(t) - 1.0) > 1e-12) throw InvalidArgument("rank1_row_scale: |t| != 1");
  CMatrix out = m.matrix();
  out.row(0) *= t;
  return ComplexSquareMatrix(std::move(out), m.is_unitary());
}

ComplexSquareMatrix realify_double(const ComplexSquareMatrix& u) {
  const auto n = u.matrix().rows();
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double x = u.matrix()(i, j).real();
      const double y = u.matrix()(i, j).imag();
      out(2 * i, 2 * j) = x;
      out(2 * i, 2 * j + 1) = y;
      out(2 * i + 1, 2 * j) = -y;
      out(2 * i + 1, 2 * j + 1) = x;
    }
  }
  return ComplexSquareMatrix(std::move(out), u.is_unitary());
}

ComplexSquareMatrix dual_product(const ComplexSquareMatrix& u) {
  const auto n2 = u.matrix().rows();
  if (n2 % 2 != 0) throw InvalidArgument("dual_product: odd dimension");
  if (!u.is_unitary()) throw InvalidArgument("dual_product: matrix is not tagged unitary");
  CMatrix z = CMatrix::Zero(n2, n2);
  for (Eigen::Index k = 0; k < n2; k += 2) {
    z(k, k + 1) = -1.0;
    z(k + 1, k) = 1.0;
  }
  CMatrix out = z * u.matrix().transpose() * z * u.matrix();
  return ComplexSquareMatrix(std::move(out), true);
}

cplx determinant(const ComplexSquareMatrix& m) { return m.matrix().determinant(); }

}  // namespace circbeta::linalg
