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

#ifndef CIRCBETA_DISTRIBUTIONS_HPP
#define CIRCBETA_DISTRIBUTIONS_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "circbeta/linalg.hpp"

namespace circbeta::dist {

/// Deterministic, splittable source of randomness.
///
/// Each (master_seed, stream_index) pair seeds its own std::mt19937_64 with
/// a splitmix64 mix of both values, so streams can be created independently
/// (one per sample, one per task) and every stream is reproducible on any
/// platform. The class models UniformRandomBitGenerator and can be handed
/// directly to Boost.Random distributions.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on the open interval (0, 1), 53 random bits.
  double uniform01();
  /// Uniform angle on (0, 2pi].
  double uniform_angle();

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; exposed for tests and for deriving sub-seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Human-readable description of the generator stack, written into every
/// output file so that results can be reproduced.
std::string generator_id();

/// Point of the Theta_nu law: uniform on the unit circle for nu = 1, and
/// density (nu-1)/(2pi) (1-|z|^2)^{(nu-3)/2} on the open disk for nu > 1.
cplx theta_nu(double nu, RngStream& rng);

struct DirichletWeights {
  std::vector<double> w;
};

/// Gamma-ratio construction; the result is renormalized to sum to one.
DirichletWeights dirichlet(const std::vector<double>& exponents, RngStream& rng);

double beta_draw(double a, double b, RngStream& rng);

/// Angle on (0, 2pi] with density proportional to |1 - e^{i phi}|^s.
///
/// For s >= 0 this is rejection sampling from the uniform law with
/// acceptance probability (|1 - e^{i phi}|/2)^s; more than 10^6 proposals
/// raise InternalConsistency. For -1 < s < 0 the exact transform
/// phi = 2 arccos(1 - 2y), y ~ Beta((s+1)/2, (s+1)/2) is used instead.
double circle_pow(double s, RngStream& rng);

struct CirclePowDraw {
  double angle;
  std::uint64_t proposals;  ///< rejection proposals used (1 for s < 0)
};
CirclePowDraw circle_pow_counted(double s, RngStream& rng);

/// Density proportional to (1 + c^2)^{-gamma}: c = T_nu/sqrt(nu) with
/// nu = 2 gamma - 1. Requires gamma > 1/2.
double gen_cauchy_real(double gamma, RngStream& rng);

/// Standard complex Gaussian: real and imaginary parts each N(0, 1/2).
cplx complex_gaussian(RngStream& rng);

/// n x n matrix of i.i.d. standard complex Gaussians, filled column by column.
linalg::ComplexSquareMatrix complex_gaussian_matrix(std::size_t n, RngStream& rng);

}  // namespace circbeta::dist

#endif  // CIRCBETA_DISTRIBUTIONS_HPP
