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
#include <string>
#include <vector>

#include "circbeta/ensembles.hpp"
#include "circbeta/error.hpp"
#include "circbeta/numeric.hpp"
#include "circbeta/polynomials.hpp"
#include "circbeta/verify.hpp"
#include "verify_support.hpp"

namespace circbeta::verify {

namespace {

using Sampler = std::function<ens::AngleSet(dist::RngStream&)>;

struct SamplerPair {
  std::string name;
  Sampler first;
  Sampler second;
};

std::vector<num::RunningStats> moments(const Sampler& s, std::size_t M, std::uint64_t seed) {
  std::vector<num::RunningStats> stats(2);
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(seed, i);
    const auto angles = s(rng);
    for (int p = 1; p <= 2; ++p) stats[static_cast<std::size_t>(p - 1)].add(ens::trace_power_moment(angles, p));
  }
  return stats;
}

}  // namespace

std::vector<CheckReport> check_cross_samplers(std::size_t M, std::uint64_t seed) {
  if (M < 2) throw InvalidArgument("check_cross_samplers: M >= 2");
  using ens::EnsembleKind;
  const std::vector<SamplerPair> pairs{
      {"circular_jacobi_vs_haar",
       [](dist::RngStream& r) { return ens::sample_circular_jacobi(4, 0.0, 1.0, r).angles; },
       [](dist::RngStream& r) { return ens::sample_haar_angles(4, r); }},
      {"cbe_beta4_vs_dual_product",
       [](dist::RngStream& r) { return ens::sample_cbe(2, 4.0, r); },
       [](dist::RngStream& r) { return ens::sample_cse_dual(2, r); }},
      {"coe_union_decimated_vs_haar",
       [](dist::RngStream& r) { return ens::superpose_and_decimate(EnsembleKind::coe_union, 3, r); },
       [](dist::RngStream& r) { return ens::sample_haar_angles(3, r); }},
      {"coe_2n_decimated_vs_dual_product",
       [](dist::RngStream& r) { return ens::superpose_and_decimate(EnsembleKind::coe_2n, 2, r); },
       [](dist::RngStream& r) { return ens::sample_cse_dual(2, r); }},
  };

  std::vector<CheckReport> out;
  std::uint64_t k = 0;
  for (const auto& pr : pairs) {
    CheckReport r("cross_samplers/" + pr.name, kZTolerance, Metric::z_score);
    const auto a = moments(pr.first, M, dist::splitmix64(seed + 2 * k));
    const auto b = moments(pr.second, M, dist::splitmix64(seed + 2 * k + 1));
    for (std::size_t p = 0; p < 2; ++p) {
      const double se = std::hypot(a[p].stderr_of_mean(), b[p].stderr_of_mean());
      const double z = std::abs(a[p].mean() - b[p].mean()) / se;
      r.record(z, "p=" + std::to_string(p + 1));
    }
    r.note = "M=" + std::to_string(M) + " per sampler";
    out.push_back(std::move(r));
    ++k;
  }
  return out;
}

std::vector<CheckReport> check_structural(std::size_t M, std::uint64_t seed) {
  CheckReport interlacing("structural/joint_interlacing", 0.0, Metric::violations);
  CheckReport product("structural/joint_product", 1e-9, Metric::abs_error);
  CheckReport real_roots("structural/recurrence_real_roots", 1e-8, Metric::abs_error);

  const std::uint64_t joint_seed = dist::splitmix64(seed);
  const std::uint64_t cj_seed = dist::splitmix64(seed + 1);
  std::size_t violations = 0;
  double worst_product = 0.0;
  double worst_imag = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(joint_seed, i);
    const auto draw = ens::sample_joint_perturbed(4, 2.0, rng);
    if (!poly::cyclically_interlaced(draw.theta, draw.psi)) ++violations;
    double sum_psi = 0.0;
    double sum_theta = 0.0;
    for (std::size_t j = 0; j < draw.theta.size(); ++j) {
      sum_psi += draw.psi[j];
      sum_theta += draw.theta[j];
    }
    worst_product = std::max(worst_product, std::abs(std::polar(1.0, sum_psi) - draw.t * std::polar(1.0, sum_theta)));

    dist::RngStream rng2(cj_seed, i);
    try {
      worst_imag = std::max(worst_imag, ens::sample_circular_jacobi(5, 1.0, 0.5, rng2).max_abs_imag);
    } catch (const InternalConsistency&) {
      worst_imag = std::numeric_limits<double>::infinity();
    }
  }
  interlacing.record(static_cast<double>(violations), "n=4, beta=2");
  interlacing.trials = M;
  product.record(worst_product, "n=4, beta=2");
  product.trials = M;
  real_roots.record(worst_imag, "n=5, a=1, d=0.5");
  real_roots.trials = M;
  return {interlacing, product, real_roots};
}

}  // namespace circbeta::verify
