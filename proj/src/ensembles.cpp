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

#include "circbeta/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "circbeta/error.hpp"
#include "circbeta/format.hpp"
#include "circbeta/polynomials.hpp"
#include "circbeta/version.hpp"

namespace circbeta::ens {

namespace {

constexpr std::pair<EnsembleKind, const char*> kKindNames[] = {
    {EnsembleKind::cbe, "cbe"},
    {EnsembleKind::circular_jacobi, "circular_jacobi"},
    {EnsembleKind::joint, "joint"},
    {EnsembleKind::haar, "haar"},
    {EnsembleKind::doubled_cue, "doubled_cue"},
    {EnsembleKind::cse_dual, "cse_dual"},
    {EnsembleKind::coe_union, "coe_union"},
    {EnsembleKind::coe_2n, "coe_2n"},
};

AngleSet sorted(AngleSet v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string to_string(EnsembleKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

EnsembleKind parse_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw InvalidArgument("unknown ensemble '" + name + "'");
}

void EnsembleSpec::validate() const {
  if (n < 1) throw InvalidArgument("ensemble: n must be >= 1");
  if (M < 1) throw InvalidArgument("ensemble: sample count must be >= 1");
  switch (kind) {
    case EnsembleKind::cbe:
    case EnsembleKind::joint:
      if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("ensemble: beta must be positive");
      break;
    case EnsembleKind::circular_jacobi:
      if (!(a > -1.0) || !std::isfinite(a)) throw InvalidArgument("ensemble: a must exceed -1");
      if (!(d > 0.0) || !std::isfinite(d)) throw InvalidArgument("ensemble: d must be positive");
      break;
    default:
      break;
  }
}

std::size_t EnsembleSpec::angles_per_draw() const { return kind == EnsembleKind::doubled_cue ? 2 * n : n; }

std::vector<cplx> draw_cbe_parameters(std::size_t n, double beta, dist::RngStream& rng) {
  if (n < 1) throw InvalidArgument("cbe: n must be >= 1");
  if (!(beta > 0.0)) throw InvalidArgument("cbe: beta must be positive");
  std::vector<cplx> alphas(n);
  for (std::size_t j = 0; j < n; ++j) alphas[n - j - 1] = dist::theta_nu(beta * static_cast<double>(j) + 1.0, rng);
  return alphas;
}

AngleSet sample_cbe(std::size_t n, double beta, dist::RngStream& rng) {
  const auto alphas = draw_cbe_parameters(n, beta, rng);
  return poly::unit_circle_angles(poly::szego_run(alphas).chi).angles;
}

namespace {

CircularJacobiDraw roots_to_draw(const poly::PolynomialC& p) {
  poly::RealRoots roots;
  try {
    roots = poly::real_roots_sorted(p);
  } catch (const NotRealRooted& e) {
    throw InternalConsistency(std::string("circular Jacobi recurrence produced a complex root: ") + e.what());
  }
  CircularJacobiDraw out;
  out.angles = sorted(poly::cayley_angles(roots.roots));
  out.real_roots = std::move(roots.roots);
  out.max_abs_imag = roots.max_abs_imag;
  return out;
}

void check_jacobi_params(double a, double d) {
  if (!(a > -1.0)) throw InvalidArgument("circular Jacobi: a must exceed -1");
  if (!(d > 0.0)) throw InvalidArgument("circular Jacobi: d must be positive");
}

// b_k ~ Beta(2 gamma + k d - 1, k d) (b_0 = 1), c_k generalized Cauchy with
// exponent gamma + k d.
void recurrence_step(poly::CauchyRecurrenceState& state, dist::RngStream& rng) {
  const double k = static_cast<double>(state.n);
  const double b = state.n == 0 ? 1.0 : dist::beta_draw(2.0 * state.gamma + k * state.d - 1.0, k * state.d, rng);
  const double c = dist::gen_cauchy_real(state.gamma + k * state.d, rng);
  state.advance(b, c);
}

}  // namespace

CircularJacobiDraw sample_circular_jacobi(std::size_t n, double a, double d, dist::RngStream& rng) {
  if (n < 1) throw InvalidArgument("circular Jacobi: n must be >= 1");
  check_jacobi_params(a, d);
  poly::CauchyRecurrenceState state(0.5 * a + 1.0, d);
  for (std::size_t k = 0; k < n; ++k) recurrence_step(state, rng);
  return roots_to_draw(state.p_curr);
}

std::vector<CircularJacobiDraw> circular_jacobi_sweep(std::size_t n_max, double a, double d,
                                                      dist::RngStream& rng) {
  if (n_max < 1) throw InvalidArgument("circular Jacobi: n must be >= 1");
  check_jacobi_params(a, d);
  poly::CauchyRecurrenceState state(0.5 * a + 1.0, d);
  std::vector<CircularJacobiDraw> out;
  out.reserve(n_max);
  for (std::size_t k = 0; k < n_max; ++k) {
    recurrence_step(state, rng);
    out.push_back(roots_to_draw(state.p_curr));
  }
  return out;
}

JointDraw sample_joint_perturbed(std::size_t n, double beta, dist::RngStream& rng) {
  JointDraw out;
  out.alphas = draw_cbe_parameters(n, beta, rng);
  out.theta = poly::unit_circle_angles(poly::szego_run(out.alphas).chi).angles;
  // t has density proportional to |1 - t|^{d_0 + (n-1) d - 1} with d_0 = d = beta/2.
  const double s = static_cast<double>(n) * beta / 2.0 - 1.0;
  out.t = std::polar(1.0, dist::circle_pow(s, rng));
  out.psi = poly::unit_circle_angles(poly::szego_run(out.alphas, out.t).chi).angles;
  return out;
}

linalg::ComplexSquareMatrix sample_haar(std::size_t n, dist::RngStream& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const CMatrix g = dist::complex_gaussian_matrix(n, rng).matrix();
    Eigen::HouseholderQR<CMatrix> qr(g);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    bool full_rank = true;
    for (Eigen::Index i = 0; i < r.rows(); ++i) full_rank = full_rank && std::abs(r(i, i)) > 1e-12;
    if (!full_rank) continue;
    CMatrix q = qr.householderQ();
    // Rescale column j by the phase of R_jj so that the triangular factor
    // has a positive diagonal; this makes the factorization unique.
    for (Eigen::Index j = 0; j < q.cols(); ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return linalg::ComplexSquareMatrix(std::move(q), true);
  }
  throw InternalConsistency("sample_haar: repeated rank-deficient Gaussian draws");
}

AngleSet sample_haar_angles(std::size_t n, dist::RngStream& rng) {
  return linalg::eigen_unit(sample_haar(n, rng)).angles;
}

AngleSet sample_doubled_cue(std::size_t n, dist::RngStream& rng) {
  const auto doubled = linalg::realify_double(sample_haar(n, rng));
  return linalg::eigen_unit(doubled).angles;
}

linalg::UnitEigenData sample_cse_dual_eigen(std::size_t n, dist::RngStream& rng) {
  return linalg::eigen_unit_paired(linalg::dual_product(sample_haar(2 * n, rng)));
}

AngleSet sample_cse_dual(std::size_t n, dist::RngStream& rng) { return sample_cse_dual_eigen(n, rng).angles; }

AngleSet superpose_and_decimate(EnsembleKind kind, std::size_t n, dist::RngStream& rng) {
  AngleSet merged;
  if (kind == EnsembleKind::coe_union) {
    merged = sample_cbe(n, 1.0, rng);
    const AngleSet second = sample_cbe(n, 1.0, rng);
    merged.insert(merged.end(), second.begin(), second.end());
    std::sort(merged.begin(), merged.end());
  } else if (kind == EnsembleKind::coe_2n) {
    merged = sample_cbe(2 * n, 1.0, rng);
  } else {
    throw InvalidArgument("superpose_and_decimate: kind must be coe_union or coe_2n");
  }
  const std::size_t parity = rng.uniform01() < 0.5 ? 0 : 1;
  AngleSet out;
  out.reserve(n);
  for (std::size_t k = parity; k < merged.size(); k += 2) out.push_back(merged[k]);
  return out;
}

AngleSet sample_one(const EnsembleSpec& spec, dist::RngStream& rng, AngleSet* companion, double* t_angle) {
  switch (spec.kind) {
    case EnsembleKind::cbe:
      return sample_cbe(spec.n, spec.beta, rng);
    case EnsembleKind::circular_jacobi:
      return sample_circular_jacobi(spec.n, spec.a, spec.d, rng).angles;
    case EnsembleKind::joint: {
      JointDraw draw = sample_joint_perturbed(spec.n, spec.beta, rng);
      if (companion) *companion = std::move(draw.psi);
      if (t_angle) *t_angle = linalg::wrap_angle(std::arg(draw.t));
      return draw.theta;
    }
    case EnsembleKind::haar:
      return sample_haar_angles(spec.n, rng);
    case EnsembleKind::doubled_cue:
      return sample_doubled_cue(spec.n, rng);
    case EnsembleKind::cse_dual:
      return sample_cse_dual(spec.n, rng);
    case EnsembleKind::coe_union:
    case EnsembleKind::coe_2n:
      return superpose_and_decimate(spec.kind, spec.n, rng);
  }
  throw InvalidArgument("sample_one: unhandled ensemble");
}

std::vector<std::pair<std::string, std::string>> spec_metadata(const EnsembleSpec& spec) {
  std::vector<std::pair<std::string, std::string>> md;
  md.emplace_back("ensemble", to_string(spec.kind));
  md.emplace_back("n", std::to_string(spec.n));
  if (spec.kind == EnsembleKind::cbe || spec.kind == EnsembleKind::joint) md.emplace_back("beta", format_shortest(spec.beta));
  if (spec.kind == EnsembleKind::circular_jacobi) {
    md.emplace_back("a", format_shortest(spec.a));
    md.emplace_back("d", format_shortest(spec.d));
  }
  md.emplace_back("m", std::to_string(spec.M));
  md.emplace_back("seed", std::to_string(spec.seed));
  md.emplace_back("generator", dist::generator_id());
  md.emplace_back("version", kVersion);
  return md;
}

SampleBatch sample_batch(const EnsembleSpec& spec) {
  spec.validate();
  SampleBatch batch;
  batch.spec = spec;
  batch.draws.reserve(spec.M);
  const bool joint = spec.kind == EnsembleKind::joint;
  for (std::size_t i = 0; i < spec.M; ++i) {
    dist::RngStream rng(spec.seed, i);
    AngleSet psi;
    double t_angle = 0.0;
    batch.draws.push_back(sample_one(spec, rng, joint ? &psi : nullptr, joint ? &t_angle : nullptr));
    if (joint) {
      batch.companions.push_back(std::move(psi));
      batch.t_angles.push_back(t_angle);
    }
  }

  batch.metadata = spec_metadata(spec);
  return batch;
}

double trace_power_moment(const AngleSet& angles, int p) {
  cplx sum{};
  for (double theta : angles) sum += std::polar(1.0, static_cast<double>(p) * theta);
  return std::norm(sum);
}

}  // namespace circbeta::ens
