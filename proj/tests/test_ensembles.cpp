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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circbeta/ensembles.hpp"
#include "circbeta/error.hpp"
#include "circbeta/linalg.hpp"

using namespace circbeta;
using namespace circbeta::ens;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Mean of |sum_j e^{i p theta_j}|^2 over m independent draws, with its
// standard error.
template <typename F>
std::pair<double, double> trace_moment(F draw, int p, std::size_t m, std::uint64_t seed) {
  double s = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    dist::RngStream rng(seed, i);
    const double v = trace_power_moment(draw(rng), p);
    s += v;
    s2 += v * v;
  }
  const double mean = s / m;
  return {mean, std::sqrt((s2 / m - mean * mean) / m)};
}

void check_close(std::pair<double, double> est, double expected) {
  CAPTURE(est.first);
  CAPTURE(est.second);
  CAPTURE(expected);
  CHECK(std::abs(est.first - expected) <= 5.0 * est.second);
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (auto k : {EnsembleKind::cbe, EnsembleKind::circular_jacobi, EnsembleKind::joint, EnsembleKind::haar,
                 EnsembleKind::doubled_cue, EnsembleKind::cse_dual, EnsembleKind::coe_union, EnsembleKind::coe_2n})
    CHECK(parse_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_kind("gue"), InvalidArgument);
}

TEST_CASE("spec validation") {
  EnsembleSpec s;
  CHECK_NOTHROW(s.validate());
  s.n = 0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s.n = 3;
  s.M = 0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s.M = 1;
  s.beta = -1.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = EnsembleSpec{};
  s.kind = EnsembleKind::circular_jacobi;
  s.a = -1.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s.a = 0.0;
  s.d = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = EnsembleSpec{};
  s.kind = EnsembleKind::doubled_cue;
  s.n = 3;
  CHECK(s.angles_per_draw() == 6);
}

TEST_CASE("batches are deterministic, sorted and in range") {
  for (auto k : {EnsembleKind::cbe, EnsembleKind::circular_jacobi, EnsembleKind::joint, EnsembleKind::haar,
                 EnsembleKind::doubled_cue, EnsembleKind::cse_dual, EnsembleKind::coe_union, EnsembleKind::coe_2n}) {
    CAPTURE(to_string(k));
    EnsembleSpec s;
    s.kind = k;
    s.n = 3;
    s.M = 5;
    s.seed = 99;
    const auto a = sample_batch(s);
    const auto b = sample_batch(s);
    REQUIRE(a.draws.size() == 5);
    CHECK(a.draws == b.draws);
    CHECK_FALSE(a.metadata.empty());
    for (const auto& d : a.draws) {
      CHECK(d.size() == s.angles_per_draw());
      CHECK(std::is_sorted(d.begin(), d.end()));
      for (double t : d) CHECK((t > 0.0 && t <= kTwoPi));
    }
    if (k == EnsembleKind::joint) {
      REQUIRE(a.companions.size() == 5);
      REQUIRE(a.t_angles.size() == 5);
      CHECK(a.companions == b.companions);
    }
    s.seed = 100;
    CHECK(sample_batch(s).draws != a.draws);
  }
}

TEST_CASE("trace moment helper") {
  CHECK(trace_power_moment({0.3, 1.2, 4.0}, 0) == Approx(9.0));
  CHECK(trace_power_moment({0.5, 0.5 + std::numbers::pi}, 1) == Approx(0.0).scale(1.0));
}

TEST_CASE("Haar matrices are unitary") {
  dist::RngStream rng(1, 0);
  const auto u = sample_haar(5, rng).matrix();
  CHECK((u.adjoint() * u - CMatrix::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("doubled spectrum comes in conjugate pairs") {
  dist::RngStream rng(2, 0);
  const auto angles = sample_doubled_cue(3, rng);
  REQUIRE(angles.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(angles[i] + angles[5 - i] == Approx(kTwoPi).epsilon(1e-9));
}

TEST_CASE("self-dual product spectrum is doubly degenerate") {
  dist::RngStream rng(3, 0);
  const auto eig = sample_cse_dual_eigen(3, rng);
  CHECK(eig.angles.size() == 3);
}

TEST_CASE("circular Jacobi roots are real and descending") {
  dist::RngStream rng(4, 0);
  const auto draw = sample_circular_jacobi(5, 1.0, 0.5, rng);
  CHECK(draw.angles.size() == 5);
  CHECK(draw.max_abs_imag < 1e-8);
  CHECK(std::is_sorted(draw.real_roots.rbegin(), draw.real_roots.rend()));
  const auto sweep = circular_jacobi_sweep(4, 0.0, 1.0, rng);
  REQUIRE(sweep.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(sweep[k].angles.size() == k + 1);
}

TEST_CASE("unitary-invariant trace moments") {
  // Haar: E|tr U^p|^2 = min(p, n).
  for (int p : {1, 2, 4})
    check_close(trace_moment([](dist::RngStream& r) { return sample_haar_angles(3, r); }, p, 20000, 7),
                std::min(p, 3));
  // beta = 2 Schur-parameter sampler is the same ensemble.
  check_close(trace_moment([](dist::RngStream& r) { return sample_cbe(3, 2.0, r); }, 2, 20000, 8), 2.0);
  // General beta: E|tr U|^2 = 2n/(2 + beta(n-1)).
  check_close(trace_moment([](dist::RngStream& r) { return sample_cbe(3, 4.0, r); }, 1, 20000, 9), 0.6);
  check_close(trace_moment([](dist::RngStream& r) { return sample_cbe(4, 1.0, r); }, 1, 20000, 10), 8.0 / 5.0);
  // a = 0, d = 1 circular Jacobi reduces to the unitary case.
  check_close(trace_moment([](dist::RngStream& r) { return sample_circular_jacobi(3, 0.0, 1.0, r).angles; }, 1,
                           20000, 11),
              1.0);
}
