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

#include "circbeta/distributions.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/random/beta_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/student_t_distribution.hpp>
#include <boost/version.hpp>

#include "circbeta/error.hpp"

namespace circbeta::dist {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kMaxProposals = 1'000'000;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(~stream_index))) {}

double RngStream::uniform01() {
  // Midpoint of one of 2^53 equal cells: never 0, never 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform_angle() { return kTwoPi * (1.0 - uniform01()); }

std::string generator_id() {
  return "mt19937_64 seeded by splitmix64(master_seed, stream_index); Boost.Random " +
         std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) +
         " distributions";
}

cplx theta_nu(double nu, RngStream& rng) {
  if (!(nu >= 1.0)) throw InvalidArgument("theta_nu: nu must be >= 1");
  if (nu == 1.0) return std::polar(1.0, rng.uniform_angle());
  // |z|^2 ~ Beta(1, (nu-1)/2), drawn by inverting its CDF 1 - (1-s)^{(nu-1)/2}.
  double s = 1.0 - std::pow(rng.uniform01(), 2.0 / (nu - 1.0));
  if (s >= 1.0) s = std::nextafter(1.0, 0.0);
  return std::polar(std::sqrt(s), rng.uniform_angle());
}

DirichletWeights dirichlet(const std::vector<double>& exponents, RngStream& rng) {
  if (exponents.empty()) throw InvalidArgument("dirichlet: no exponents");
  for (double d : exponents)
    if (!(d > 0.0) || !std::isfinite(d)) throw InvalidArgument("dirichlet: exponents must be positive");
  DirichletWeights out{std::vector<double>(exponents.size())};
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (std::size_t j = 0; j < exponents.size(); ++j)
      out.w[j] = boost::random::gamma_distribution<double>(exponents[j], 1.0)(rng);
    const double total = std::accumulate(out.w.begin(), out.w.end(), 0.0);
    if (total > 0.0 && std::isfinite(total)) {
      for (double& x : out.w) x /= total;
      return out;
    }
  }
  throw InternalConsistency("dirichlet: gamma variates all underflowed");
}

double beta_draw(double a, double b, RngStream& rng) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidArgument("beta_draw: parameters must be positive");
  const double x = boost::random::beta_distribution<double>(a, b)(rng);
  if (x <= 0.0) return std::numeric_limits<double>::min();
  if (x >= 1.0) return std::nextafter(1.0, 0.0);
  return x;
}

CirclePowDraw circle_pow_counted(double s, RngStream& rng) {
  if (!(s > -1.0) || !std::isfinite(s)) throw InvalidArgument("circle_pow: exponent must exceed -1");
  if (s < 0.0) {
    const double h = 0.5 * (s + 1.0);
    const double y = beta_draw(h, h, rng);
    const double phi = 2.0 * std::acos(1.0 - 2.0 * y);
    return {linalg::wrap_angle(phi), 1};
  }
  for (std::uint64_t k = 1; k <= kMaxProposals; ++k) {
    const double phi = rng.uniform_angle();
    const double accept = std::pow(std::abs(std::sin(0.5 * phi)), s);
    if (rng.uniform01() < accept) return {phi, k};
  }
  throw InternalConsistency("circle_pow: rejection cap of 1e6 proposals reached");
}

double circle_pow(double s, RngStream& rng) { return circle_pow_counted(s, rng).angle; }

double gen_cauchy_real(double gamma, RngStream& rng) {
  if (!(gamma > 0.5) || !std::isfinite(gamma)) throw InvalidArgument("gen_cauchy_real: gamma must exceed 1/2");
  const double nu = 2.0 * gamma - 1.0;
  return boost::random::student_t_distribution<double>(nu)(rng) / std::sqrt(nu);
}

cplx complex_gaussian(RngStream& rng) {
  boost::random::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

linalg::ComplexSquareMatrix complex_gaussian_matrix(std::size_t n, RngStream& rng) {
  if (n == 0) throw InvalidArgument("complex_gaussian_matrix: n must be >= 1");
  const auto size = static_cast<Eigen::Index>(n);
  CMatrix g(size, size);
  for (Eigen::Index j = 0; j < size; ++j)
    for (Eigen::Index i = 0; i < size; ++i) g(i, j) = complex_gaussian(rng);
  return linalg::ComplexSquareMatrix(std::move(g));
}

}  // namespace circbeta::dist
