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

#ifndef CIRCBETA_DENSITIES_HPP
#define CIRCBETA_DENSITIES_HPP

#include <cstddef>
#include <vector>

#include "circbeta/linalg.hpp"

// Closed-form densities and normalization constants used by the
// verification lab. Constants are assembled in log space.
//
// Unless stated otherwise a density is normalized over the full cube of
// its (unordered) angles. Cauchy-ensemble densities on the real line are
// normalized over the ordered region x_1 > ... > x_N.

namespace circbeta::ens {

/// log|Gamma(z)| for complex z (Lanczos approximation with reflection).
double log_abs_gamma(cplx z);

/// prod_{j<N} Gamma(lj+a+b+1) Gamma(l(j+1)+1) / (Gamma(lj+a+1) Gamma(lj+b+1) Gamma(1+l)).
double log_norm_MN(std::size_t N, double a, double b, double lambda);
double norm_constant_MN(std::size_t N, double a, double b, double lambda);
/// Same product with a = conj(b): the Gamma(lj+a+1) Gamma(lj+b+1) pair
/// becomes |Gamma(lj + b + 1)|^2.
double log_norm_MN_conjugate(std::size_t N, cplx b, double lambda);

/// log of (2pi)^N Gamma(beta N/2 + 1)/Gamma(beta/2 + 1)^N, the constant
/// normalizing the circular beta ensemble density.
double log_cbe_constant(std::size_t N, double beta);
/// log of Gamma(beta/2)^N / Gamma(beta N/2), the normalizer of the
/// Dirichlet law of the first-component weights.
double log_dirichlet_weight_constant(std::size_t N, double beta);
/// log of the circular Jacobi normalizer (2pi)^N M_N(a/2, a/2, c).
double log_circular_jacobi_constant(std::size_t N, double a, double c);

/// log A: normalizer of the conditional density of perturbed angles.
double log_perturbation_constant(std::size_t n, double d0, double d);
/// log of Gamma(g)^2/(pi 2^{2(1-g)}) with complex g: the generalized Cauchy
/// normalizer.
double log_gen_cauchy_constant(cplx gamma);
/// log A~ for the Cauchy conditional density; d holds d_1..d_n.
double log_cauchy_conditional_constant(cplx gamma, const std::vector<double>& d);

/// log I_n(gamma; d) from the closed gamma-function product.
double log_In_closed(std::size_t n, cplx gamma, double d);
/// log I_n(gamma; d) from iterating I_{k+1}(g) = ratio(k, g) I_k(g - d).
double log_In_chain(std::size_t n, cplx gamma, double d);
/// I_{n+1}(gamma; d) / I_n(gamma - d; d).
double In_ratio(std::size_t n, cplx gamma, double d);

/// Selberg integral over [0,1]^N of prod x^{al-1}(1-x)^{be-1}|Delta|^{2 ga}.
double log_selberg(std::size_t N, double alpha, double beta, double gamma);
/// log normalizer of the real orthogonal eigen-angle density on [0, pi]^N.
double log_real_orthogonal_constant(std::size_t N, double a, double b, double beta);

double density_cbe(double beta, const std::vector<double>& theta);
double density_circular_jacobi(double a, double c, const std::vector<double>& theta);

/// Density of psi given theta (theta ascending; psi cyclically interlaced),
/// normalized over the interlacing region. Zero outside the support.
double density_conditional_ap(double d0, double d, const std::vector<double>& theta,
                              const std::vector<double>& psi);
/// Joint density of psi and theta_1..theta_{n-1} with theta_n fixed at
/// theta.back(); the theta_1..theta_{n-1} are normalized as an ordered set.
double density_joint_cs(double a, double a1, double d, const std::vector<double>& theta,
                        const std::vector<double>& psi);

/// Conditional density of x_0 > ... > x_n given y_1 > ... > y_n under the
/// interlacing x_0 > y_1 > x_1 > ... > y_n > x_n. Re gamma is fixed by
/// d0 + sum d + 1 = 2 Re gamma; gamma_imag supplies Im gamma.
double density_cauchy_conditional(double d0, const std::vector<double>& d, double gamma_imag,
                                  const std::vector<double>& y, const std::vector<double>& x);
/// Dixon-Anderson density of u given y with y_1 > u_1 > ... > u_{n-1} > y_n.
double density_dixon_anderson(double d, const std::vector<double>& y, const std::vector<double>& u);

/// prod (1+ix)^{-g}(1-ix)^{-conj g} |Delta|^{2d} / I_N(g; d).
double density_cauchy_ensemble(cplx gamma, double d, const std::vector<double>& x);
/// Marginal of the n+1 points x: the Cauchy ensemble with parameter gamma.
double density_cauchy_marginal_x(cplx gamma, double d, const std::vector<double>& x);
/// Law of the n poles y: the Cauchy ensemble with parameter gamma - d.
double density_cauchy_marginal_y(cplx gamma, double d, const std::vector<double>& y);

/// Eigen-angle density on [0, pi]^N of the real orthogonal ensemble with
/// weights |1 - e^{i theta}|^{2a+1} |1 + e^{i theta}|^{2b+1}.
double density_real_orthogonal(double a, double b, double beta, const std::vector<double>& theta);

enum class DensityKind {
  cbe,
  circular_jacobi,
  conditional_ap,
  joint_cs,
  cauchy_conditional,
  dixon_anderson,
  cauchy_marginal_x,
  cauchy_marginal_y,
  real_orthogonal,
};

struct DensityParams {
  double beta = 2.0;
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double d = 1.0;
  double d0 = 1.0;
  double a1 = 1.0;
  cplx gamma{1.0, 0.0};
  std::vector<double> d_list;  ///< cauchy_conditional: d_1..d_n (defaults to d)
};

/// Dispatches to the functions above. `primary` holds theta (or y for the
/// Cauchy conditional and Dixon-Anderson cases, or the points of a Cauchy
/// ensemble); `secondary` holds psi, x or u where needed.
double density_eval(DensityKind kind, const DensityParams& params, const std::vector<double>& primary,
                    const std::vector<double>& secondary = {});

}  // namespace circbeta::ens

#endif  // CIRCBETA_DENSITIES_HPP
