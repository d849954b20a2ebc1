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

#ifndef CIRCBETA_LINALG_HPP
#define CIRCBETA_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace circbeta {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

namespace linalg {

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kDegeneracyTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-9;
inline constexpr double kPairMergeTolerance = 1e-8;

/// Dense n x n complex matrix with finite entries. A matrix tagged unitary
/// has been checked against max|M^H M - I| <= kUnitaryTolerance.
class ComplexSquareMatrix {
 public:
  ComplexSquareMatrix() = default;

  /// Throws InvalidArgument for non-square, empty or non-finite input, and
  /// when tag_unitary is set but the unitarity check fails.
  explicit ComplexSquareMatrix(CMatrix entries, bool tag_unitary = false);

  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  bool is_unitary() const { return unitary_; }

  /// max-entry norm of M^H M - I.
  double unitarity_defect() const;

 private:
  CMatrix m_;
  bool unitary_ = false;
};

/// Schur (Verblunsky) parameters alpha_0..alpha_{n-1}. Interior parameters
/// lie in the open unit disk; with unitary_boundary set the last one lies on
/// the unit circle. alpha_{-1} = -1 is implicit.
class SchurParameters {
 public:
  SchurParameters(std::vector<cplx> alphas, bool unitary_boundary = true);

  std::size_t size() const { return alphas_.size(); }
  const std::vector<cplx>& alphas() const { return alphas_; }
  bool unitary_boundary() const { return unitary_boundary_; }
  /// alpha_j with alpha_{-1} = -1.
  cplx alpha(long j) const { return j < 0 ? cplx{-1.0, 0.0} : alphas_[static_cast<std::size_t>(j)]; }
  /// rho_j = sqrt(1 - |alpha_j|^2).
  double rho(std::size_t j) const;

 private:
  std::vector<cplx> alphas_;
  bool unitary_boundary_;
};

/// Real parameters alpha_0..alpha_{2n-2} of a 2n x 2n real orthogonal
/// Hessenberg matrix of determinant +1 (alpha_{2n-1} = -1 implicit).
class RealSchurParameters {
 public:
  explicit RealSchurParameters(std::vector<double> alphas);

  const std::vector<double>& alphas() const { return alphas_; }
  /// Half the matrix dimension.
  std::size_t half_size() const { return (alphas_.size() + 1) / 2; }

 private:
  std::vector<double> alphas_;
};

/// Real symmetric tridiagonal matrix in the layout
///
///   [ a_n     b_{n-1}                 ]
///   [ b_{n-1} a_{n-1}  b_{n-2}        ]
///   [           ...      ...     b_1  ]
///   [                    b_1     a_1  ]
///
/// diag() holds a_1..a_n and offdiag() holds b_1..b_{n-1} (label order, not
/// row order). The first component of an eigenvector is its a_n row entry.
class TridiagonalMatrix {
 public:
  /// Requires every b_i > 0.
  static TridiagonalMatrix jacobi(std::vector<double> diag, std::vector<double> offdiag);
  /// Allows b_i >= 0.
  static TridiagonalMatrix relaxed(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t size() const { return diag_.size(); }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<double>& offdiag() const { return offdiag_; }
  Eigen::MatrixXd dense() const;
  ComplexSquareMatrix to_complex() const;

 private:
  TridiagonalMatrix(std::vector<double> diag, std::vector<double> offdiag, bool strict);
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

/// Eigen-angles theta_1 < ... < theta_n in (0, 2pi] and first-component
/// weights w_j = |v_{1j}|^2 of a unitary matrix.
struct UnitEigenData {
  std::vector<double> angles;
  std::vector<double> weights;

  std::size_t size() const { return angles.size(); }
  /// q_j = sqrt(w_j).
  std::vector<double> moduli() const;
  std::vector<cplx> eigenvalues() const;
};

/// Eigenvalues lambda_1 > ... > lambda_n and first components q_j > 0.
struct RealEigenData {
  std::vector<double> eigenvalues;
  std::vector<double> first_components;
};

/// Maps any real angle into (0, 2pi].
double wrap_angle(double angle);

/// Unitary upper Hessenberg matrix with H_{i,i} = -alpha_{i-1} conj(alpha_i),
/// H_{i+1,i} = rho_i and H_{i,j} = -alpha_{i-1} conj(alpha_j) prod rho_l.
ComplexSquareMatrix build_hessenberg(const SchurParameters& params);

/// Same construction with real alphas and alpha_{2n-1} = -1: a real
/// orthogonal matrix of determinant +1.
ComplexSquareMatrix build_real_orthogonal(const RealSchurParameters& params);

/// Eigen-decomposition of a unitary-tagged matrix via complex Schur form.
/// Throws DegenerateSpectrum if two angles are closer than 1e-9.
UnitEigenData eigen_unit(const ComplexSquareMatrix& m);

/// Eigen-decomposition of a unitary-tagged matrix whose spectrum is doubly
/// degenerate: paired angles are merged and their weights summed.
/// Throws InternalConsistency if a pair is split by more than 1e-8.
UnitEigenData eigen_unit_paired(const ComplexSquareMatrix& m);

RealEigenData eigen_symmetric_tridiag(const TridiagonalMatrix& t);

/// ((M - shift I)^{-1})_{11} by direct linear solve.
cplx resolvent_11(const ComplexSquareMatrix& m, cplx shift);

/// ((I - x M)^{-1})_{11}.
cplx resolvent_11_reciprocal(const ComplexSquareMatrix& m, cplx x);

/// (I - (1 - t) e_1 e_1^T) M: the first row scaled by a unimodular t.
ComplexSquareMatrix rank1_row_scale(const ComplexSquareMatrix& m, cplx t);

/// Replaces each entry x + iy by the block [[x, y], [-y, x]].
ComplexSquareMatrix realify_double(const ComplexSquareMatrix& u);

/// Z U^T Z U with Z = I_n (x) [[0, -1], [1, 0]].
ComplexSquareMatrix dual_product(const ComplexSquareMatrix& u);

cplx determinant(const ComplexSquareMatrix& m);

}  // namespace linalg
}  // namespace circbeta

#endif  // CIRCBETA_LINALG_HPP
