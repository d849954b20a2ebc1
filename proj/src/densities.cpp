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

#include "circbeta/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "circbeta/error.hpp"
#include "circbeta/polynomials.hpp"

namespace circbeta::ens {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;
const double kLogPi = std::log(kPi);
const double kLogTwoPi = std::log(2.0 * kPi);

double lgam(double x) {
  if (!(x > 0.0)) throw InvalidArgument("gamma function argument must be positive");
  return std::lgamma(x);
}

double log_chord(double a, double b) { return std::log(2.0 * std::abs(std::sin(0.5 * (a - b)))); }

bool strictly_descending(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] > v[i])) return false;
  return true;
}

bool ascending_in_circle(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0 && v[i] <= 2.0 * kPi)) return false;
    if (i > 0 && !(v[i] > v[i - 1])) return false;
  }
  return true;
}

// (1 + ix)^{-g} (1 - ix)^{-conj g} = (1 + x^2)^{-Re g} exp(2 Im g atan x).
double log_cauchy_weight(cplx g, double x) {
  return -g.real() * std::log1p(x * x) + 2.0 * g.imag() * std::atan(x);
}

double finite_or_zero(double log_value) {
  const double v = std::exp(log_value);
  return std::isnan(v) ? 0.0 : v;
}

}  // namespace

double log_abs_gamma(cplx z) {
  if (z.imag() == 0.0) {
    if (z.real() <= 0.0 && z.real() == std::floor(z.real())) throw InvalidArgument("log_abs_gamma: pole");
    return std::lgamma(z.real());
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return kLogPi - std::log(std::abs(std::sin(kPi * z))) - log_abs_gamma(1.0 - z);
  }
  static constexpr double kCoeffs[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                       771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                       -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const cplx w = z - 1.0;
  cplx x = kCoeffs[0];
  for (int i = 1; i < 9; ++i) x += kCoeffs[i] / (w + static_cast<double>(i));
  const cplx t = w + 7.5;
  return (0.5 * kLogTwoPi + (w + 0.5) * std::log(t) - t + std::log(x)).real();
}

double log_norm_MN(std::size_t N, double a, double b, double lambda) {
  double acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const double lj = lambda * static_cast<double>(j);
    acc += lgam(lj + a + b + 1.0) + lgam(lambda * static_cast<double>(j + 1) + 1.0) - lgam(lj + a + 1.0) -
           lgam(lj + b + 1.0) - lgam(1.0 + lambda);
  }
  return acc;
}

double norm_constant_MN(std::size_t N, double a, double b, double lambda) {
  return std::exp(log_norm_MN(N, a, b, lambda));
}

double log_norm_MN_conjugate(std::size_t N, cplx b, double lambda) {
  if (!(2.0 * b.real() + 1.0 > 0.0) || !(b.real() + 1.0 > 0.0))
    throw InvalidArgument("log_norm_MN_conjugate: non-positive gamma argument");
  double acc = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const double lj = lambda * static_cast<double>(j);
    acc += lgam(lj + 2.0 * b.real() + 1.0) + lgam(lambda * static_cast<double>(j + 1) + 1.0) -
           2.0 * log_abs_gamma(lj + b + 1.0) - lgam(1.0 + lambda);
  }
  return acc;
}

double log_cbe_constant(std::size_t N, double beta) {
  const double n = static_cast<double>(N);
  return n * kLogTwoPi + lgam(beta * n / 2.0 + 1.0) - n * lgam(beta / 2.0 + 1.0);
}

double log_dirichlet_weight_constant(std::size_t N, double beta) {
  const double n = static_cast<double>(N);
  return n * lgam(beta / 2.0) - lgam(beta * n / 2.0);
}

double log_circular_jacobi_constant(std::size_t N, double a, double c) {
  return static_cast<double>(N) * kLogTwoPi + log_norm_MN(N, a / 2.0, a / 2.0, c);
}

double log_perturbation_constant(std::size_t n, double d0, double d) {
  if (n < 1 || !(d0 > 0.0) || !(d > 0.0)) throw InvalidArgument("perturbation constant: need n >= 1, d0, d > 0");
  const double m = static_cast<double>(n - 1);
  const double total = m * d + d0;
  return lgam(total) - m * lgam(d) - lgam(d0) + 2.0 * lgam(0.5 * (total + 1.0)) - kLogTwoPi - lgam(total);
}

double log_gen_cauchy_constant(cplx gamma) {
  return 2.0 * log_abs_gamma(gamma) - kLogPi - 2.0 * (1.0 - gamma.real()) * kLog2;
}

double log_cauchy_conditional_constant(cplx gamma, const std::vector<double>& d) {
  double sum_d = 0.0;
  double log_prod = 0.0;
  for (double dj : d) {
    sum_d += dj;
    log_prod += lgam(dj);
  }
  return log_gen_cauchy_constant(gamma) - lgam(2.0 * gamma.real() - 1.0 - sum_d) - log_prod;
}

double log_In_closed(std::size_t n, cplx gamma, double d) {
  if (n == 0) return 0.0;
  const double nn = static_cast<double>(n);
  const cplx b = gamma - d * (nn - 1.0) - 1.0;
  if (!(2.0 * b.real() + 1.0 > 0.0)) throw InvalidArgument("I_n: integral diverges for these parameters");
  const double log2_exponent = d * nn * (nn - 1.0) - 2.0 * nn * (gamma.real() - 1.0);
  return log2_exponent * kLog2 + nn * kLogPi + log_norm_MN_conjugate(n, b, d) - std::lgamma(nn + 1.0);
}

double In_ratio(std::size_t n, cplx gamma, double d) {
  const double nn = static_cast<double>(n);
  const double arg = 2.0 * gamma.real() - nn * d - 1.0;
  if (!(arg > 0.0)) throw InvalidArgument("I_n recurrence: integral diverges for these parameters");
  return std::exp(kLogPi + (2.0 - 2.0 * gamma.real()) * kLog2 + std::lgamma(arg) + lgam((nn + 1.0) * d) -
                  lgam(d) - 2.0 * log_abs_gamma(gamma));
}

double log_In_chain(std::size_t n, cplx gamma, double d) {
  double acc = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    acc += std::log(In_ratio(k - 1, gamma, d));
    gamma -= d;
  }
  return acc;
}

double log_selberg(std::size_t N, double alpha, double beta, double gamma) {
  double acc = 0.0;
  const double n = static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double jg = static_cast<double>(j) * gamma;
    acc += lgam(alpha + jg) + lgam(beta + jg) + lgam(1.0 + jg + gamma) - lgam(alpha + beta + (n + j - 1.0) * gamma) -
           lgam(1.0 + gamma);
  }
  return acc;
}

double log_real_orthogonal_constant(std::size_t N, double a, double b, double beta) {
  // x = sin^2(theta/2) maps the density onto a Selberg integrand.
  const double n = static_cast<double>(N);
  return (2.0 * n * (a + b + 1.0) + beta * n * (n - 1.0)) * kLog2 + log_selberg(N, a + 1.0, b + 1.0, beta / 2.0);
}

double density_cbe(double beta, const std::vector<double>& theta) {
  if (!(beta > 0.0)) throw InvalidArgument("density_cbe: beta must be positive");
  double acc = -log_cbe_constant(theta.size(), beta);
  for (std::size_t j = 0; j < theta.size(); ++j)
    for (std::size_t k = j + 1; k < theta.size(); ++k) acc += beta * log_chord(theta[j], theta[k]);
  return finite_or_zero(acc);
}

double density_circular_jacobi(double a, double c, const std::vector<double>& theta) {
  if (!(a > -1.0) || !(c > 0.0)) throw InvalidArgument("density_circular_jacobi: need a > -1, c > 0");
  double acc = -log_circular_jacobi_constant(theta.size(), a, c);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    acc += a * log_chord(0.0, theta[j]);
    for (std::size_t k = j + 1; k < theta.size(); ++k) acc += 2.0 * c * log_chord(theta[j], theta[k]);
  }
  return finite_or_zero(acc);
}

double density_conditional_ap(double d0, double d, const std::vector<double>& theta,
                              const std::vector<double>& psi) {
  const std::size_t n = theta.size();
  const double log_a = log_perturbation_constant(n, d0, d);
  if (psi.size() != n || !ascending_in_circle(theta) || !poly::cyclically_interlaced(theta, psi)) return 0.0;
  const double tn = theta[n - 1];
  double acc = log_a;
  for (std::size_t l = 0; l < n; ++l) acc += (d0 - 1.0) * log_chord(tn, psi[l]);
  for (std::size_t l = 0; l + 1 < n; ++l) acc -= (d0 + d - 1.0) * log_chord(tn, theta[l]);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) acc += (d - 1.0) * log_chord(theta[j], psi[l]);
    for (std::size_t k = j + 1; k + 1 < n; ++k) acc -= (2.0 * d - 1.0) * log_chord(theta[j], theta[k]);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) acc += log_chord(psi[j], psi[k]);
  return finite_or_zero(acc);
}

double density_joint_cs(double a, double a1, double d, const std::vector<double>& theta,
                        const std::vector<double>& psi) {
  const std::size_t n = theta.size();
  if (n < 1 || psi.size() != n) throw InvalidArgument("density_joint_cs: theta and psi must have equal size >= 1");
  const double h = (a + a1 + d) / 2.0;
  const double log_c = log_perturbation_constant(n, a + 1.0, d) + std::lgamma(static_cast<double>(n)) -
                       static_cast<double>(n - 1) * kLogTwoPi - log_norm_MN(n - 1, h, h, d);
  std::vector<double> sorted_theta(theta);
  std::sort(sorted_theta.begin(), sorted_theta.end());
  if (!ascending_in_circle(sorted_theta) || !poly::cyclically_interlaced(theta, psi)) return 0.0;
  const double tn = theta.back();
  double acc = log_c;
  for (std::size_t l = 0; l < n; ++l) acc += a * log_chord(tn, psi[l]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) acc += log_chord(psi[j], psi[k]);
  for (std::size_t l = 0; l + 1 < n; ++l) acc += a1 * log_chord(tn, theta[l]);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = j + 1; k + 1 < n; ++k) acc += log_chord(theta[j], theta[k]);
    for (std::size_t l = 0; l < n; ++l) acc += (d - 1.0) * log_chord(theta[j], psi[l]);
  }
  return finite_or_zero(acc);
}

double density_cauchy_conditional(double d0, const std::vector<double>& d, double gamma_imag,
                                  const std::vector<double>& y, const std::vector<double>& x) {
  const std::size_t n = d.size();
  if (!(d0 > 0.0)) throw InvalidArgument("density_cauchy_conditional: d0 must be positive");
  for (double dj : d)
    if (!(dj > 0.0)) throw InvalidArgument("density_cauchy_conditional: d_j must be positive");
  if (y.size() != n || x.size() != n + 1) throw InvalidArgument("density_cauchy_conditional: need n poles, n+1 zeros");
  const double gamma_real = 0.5 * (d0 + std::accumulate(d.begin(), d.end(), 0.0) + 1.0);
  const cplx gamma{gamma_real, gamma_imag};
  double acc = log_cauchy_conditional_constant(gamma, d);
  for (std::size_t j = 0; j < n; ++j)
    if (!(x[j] > y[j] && y[j] > x[j + 1])) return 0.0;
  for (std::size_t l = 0; l <= n; ++l) acc += log_cauchy_weight(gamma, x[l]);
  for (std::size_t j = 0; j < n; ++j) {
    acc -= log_cauchy_weight(gamma - d[j], y[j]);
    for (std::size_t l = 0; l <= n; ++l) acc += (d[j] - 1.0) * std::log(std::abs(y[j] - x[l]));
    for (std::size_t k = j + 1; k < n; ++k) acc += (1.0 - d[j] - d[k]) * std::log(std::abs(y[j] - y[k]));
  }
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) acc += std::log(std::abs(x[j] - x[k]));
  return finite_or_zero(acc);
}

double density_dixon_anderson(double d, const std::vector<double>& y, const std::vector<double>& u) {
  const std::size_t n = y.size();
  if (!(d > 0.0) || n < 1 || u.size() + 1 != n) throw InvalidArgument("density_dixon_anderson: bad arguments");
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (!(y[j] > u[j] && u[j] > y[j + 1])) return 0.0;
  const double nn = static_cast<double>(n);
  double acc = lgam(nn * d) - nn * lgam(d);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = j + 1; k + 1 < n; ++k) acc += std::log(u[j] - u[k]);
    for (std::size_t k = 0; k < n; ++k) acc += (d - 1.0) * std::log(std::abs(u[j] - y[k]));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) acc -= (2.0 * d - 1.0) * std::log(y[j] - y[k]);
  return finite_or_zero(acc);
}

double density_cauchy_ensemble(cplx gamma, double d, const std::vector<double>& x) {
  if (!(d > 0.0)) throw InvalidArgument("density_cauchy_ensemble: d must be positive");
  double acc = -log_In_closed(x.size(), gamma, d);
  for (std::size_t j = 0; j < x.size(); ++j) {
    acc += log_cauchy_weight(gamma, x[j]);
    for (std::size_t k = j + 1; k < x.size(); ++k) acc += 2.0 * d * std::log(std::abs(x[j] - x[k]));
  }
  return finite_or_zero(acc);
}

double density_cauchy_marginal_x(cplx gamma, double d, const std::vector<double>& x) {
  return strictly_descending(x) ? density_cauchy_ensemble(gamma, d, x) : 0.0;
}

double density_cauchy_marginal_y(cplx gamma, double d, const std::vector<double>& y) {
  return strictly_descending(y) ? density_cauchy_ensemble(gamma - d, d, y) : 0.0;
}

double density_real_orthogonal(double a, double b, double beta, const std::vector<double>& theta) {
  if (!(a > -1.0) || !(b > -1.0) || !(beta > 0.0))
    throw InvalidArgument("density_real_orthogonal: need a, b > -1 and beta > 0");
  double acc = -log_real_orthogonal_constant(theta.size(), a, b, beta);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    if (!(theta[j] >= 0.0 && theta[j] <= kPi)) return 0.0;
    acc += (2.0 * a + 1.0) * log_chord(0.0, theta[j]) + (2.0 * b + 1.0) * log_chord(kPi, theta[j]);
    for (std::size_t k = j + 1; k < theta.size(); ++k)
      acc += beta * (log_chord(theta[j], theta[k]) + log_chord(0.0, theta[j] + theta[k]));
  }
  return finite_or_zero(acc);
}

double density_eval(DensityKind kind, const DensityParams& p, const std::vector<double>& primary,
                    const std::vector<double>& secondary) {
  switch (kind) {
    case DensityKind::cbe:
      return density_cbe(p.beta, primary);
    case DensityKind::circular_jacobi:
      return density_circular_jacobi(p.a, p.c, primary);
    case DensityKind::conditional_ap:
      return density_conditional_ap(p.d0, p.d, primary, secondary);
    case DensityKind::joint_cs:
      return density_joint_cs(p.a, p.a1, p.d, primary, secondary);
    case DensityKind::cauchy_conditional: {
      const std::vector<double> d = p.d_list.empty() ? std::vector<double>(primary.size(), p.d) : p.d_list;
      return density_cauchy_conditional(p.d0, d, p.gamma.imag(), primary, secondary);
    }
    case DensityKind::dixon_anderson:
      return density_dixon_anderson(p.d, primary, secondary);
    case DensityKind::cauchy_marginal_x:
      return density_cauchy_marginal_x(p.gamma, p.d, primary);
    case DensityKind::cauchy_marginal_y:
      return density_cauchy_marginal_y(p.gamma, p.d, primary);
    case DensityKind::real_orthogonal:
      return density_real_orthogonal(p.a, p.b, p.beta, primary);
  }
  throw InvalidArgument("density_eval: unknown density");
}

}  // namespace circbeta::ens
