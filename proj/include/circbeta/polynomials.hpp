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

#ifndef CIRCBETA_POLYNOMIALS_HPP
#define CIRCBETA_POLYNOMIALS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "circbeta/linalg.hpp"

namespace circbeta::poly {

/// Complex polynomial with coefficients c_0..c_d in ascending powers.
class PolynomialC {
 public:
  /// Throws InvalidArgument if empty or non-finite. Trailing coefficients
  /// below 1e-14 of the largest one are dropped, so degree() reflects the
  /// true degree (the zero polynomial has degree 0).
  explicit PolynomialC(std::vector<cplx> coeffs);

  static PolynomialC one() { return PolynomialC({cplx{1.0, 0.0}}); }
  /// Monic polynomial with the given roots.
  static PolynomialC from_roots(const std::vector<cplx>& roots);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx leading() const { return coeffs_.back(); }
  bool is_monic(double tol = 1e-12) const { return std::abs(coeffs_.back() - 1.0) <= tol; }

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

/// chi_k and its companion chi~_k after k steps of the coupled recurrence
///   chi_k  = z chi_{k-1} - conj(alpha_{k-1}) chi~_{k-1}
///   chi~_k = chi~_{k-1} - z alpha_{k-1} chi_{k-1}
/// seeded with chi_0 = 1, chi~_0 = init.
struct SzegoPair {
  PolynomialC chi;
  PolynomialC chi_tilde;
  std::size_t k;
  cplx init;
};

/// For init = 1, chi_N is the characteristic polynomial of the unitary
/// Hessenberg matrix built from alphas. For |init| = 1, chi_N is the
/// characteristic polynomial of the same matrix with its first row scaled
/// by init.
SzegoPair szego_run(const std::vector<cplx>& alphas, cplx init = cplx{1.0, 0.0});

/// Characteristic polynomial of the bottom steps x steps block of the
/// Hessenberg matrix, via the recurrence with alpha_{k-1} replaced by
/// -conj(alpha_{n-1-k}) alpha_{n-1}. steps defaults to n - 1.
SzegoPair bottom_run(const std::vector<cplx>& alphas);
SzegoPair bottom_run(const std::vector<cplx>& alphas, std::size_t steps);

/// One step of p_{n+1} = ((z - c)/b) p_n + (1 - 1/b)(1 + z^2) p_{n-1}.
/// At n = 0 (constant p_curr) b must be 1 and p_prev is ignored.
PolynomialC three_term_step(const PolynomialC& p_curr, const PolynomialC& p_prev, double b, double c);

/// State of the random three-term recurrence: the last two monic
/// polynomials and the (b, c) draws that produced them.
struct CauchyRecurrenceState {
  struct Draw {
    double b;
    double c;
  };

  CauchyRecurrenceState(double gamma, double d);

  /// Applies one step with the given draws and records them.
  void advance(double b, double c);
  std::size_t step() const { return n; }

  PolynomialC p_prev;
  PolynomialC p_curr;
  std::size_t n = 0;
  double gamma;
  double d;
  std::vector<Draw> draws;
};

/// All roots as eigenvalues of the companion matrix, each refined by
/// guarded Newton steps.
std::vector<cplx> companion_roots(const PolynomialC& p);

struct CircleRoots {
  std::vector<double> angles;  ///< sorted, in (0, 2pi]
  double max_radial_deviation;
};

/// Throws NotUnimodular if some root is farther than 1e-6 from the circle.
CircleRoots unit_circle_angles(const PolynomialC& p);

struct RealRoots {
  std::vector<double> roots;  ///< descending
  double max_abs_imag;
};

/// Throws NotRealRooted if some root has |Im| > 1e-6.
RealRoots real_roots_sorted(const PolynomialC& p);

/// Angles theta_1 < ... < theta_n with psi_i in the cyclic gap
/// (theta_{i-1}, theta_i), theta_0 = theta_n - 2pi. new_angles[i] is
/// stored wrapped into (0, 2pi], so new_angles[0] may exceed theta_n.
struct InterlacedSpectrum {
  std::vector<double> base_angles;
  std::vector<double> new_angles;
  cplx t;
};

/// Zeros of C(z) = 1 + (t - 1) sum_j w_j e^{i theta_j}/(e^{i theta_j} - z):
/// the eigen-angles of the unitary matrix after its first row is scaled by t.
/// Bisection on the cotangent form inside each gap, then Newton polish.
InterlacedSpectrum perturbed_spectrum(const linalg::UnitEigenData& eig, cplx t);

/// Evaluates C(z) above.
cplx perturbation_function(const linalg::UnitEigenData& eig, cplx t, cplx z);

/// True iff the two angle sets alternate strictly around the circle.
bool cyclically_interlaced(std::vector<double> first, std::vector<double> second);

/// Real roots x_0 > y_1 > x_1 > ... > y_n > x_n on the line.
struct InterlacedRealSpectrum {
  std::vector<double> x;
  std::vector<double> y;

  bool is_strictly_interlaced() const;
};

/// theta from (x - i)/(x + i) = e^{i theta}, in (0, 2pi].
std::vector<double> cayley_angles(const std::vector<double>& x);

/// Inverse of cayley_angles: x = i (1 + e^{i theta})/(1 - e^{i theta})
/// = -cot(theta/2).
double inverse_cayley(double theta);

}  // namespace circbeta::poly

#endif  // CIRCBETA_POLYNOMIALS_HPP
