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

#include <cmath>
#include <limits>

#include "circbeta/error.hpp"
#include "circbeta/verify.hpp"

using namespace circbeta;
using namespace circbeta::verify;

namespace {

void require_all_pass(const std::vector<CheckReport>& reports) {
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CAPTURE(r.max_rel_error);
    CAPTURE(r.tolerance);
    CAPTURE(r.note);
    CHECK(r.passed);
    CHECK(r.trials > 0);
  }
}

SuiteOptions quick() {
  SuiteOptions o;
  o.seed = 3;
  o.trials = 10;
  o.jacobian_points = 4;
  o.conditional_samples = 20000;
  o.cross_samples = 4000;
  o.structural_samples = 1000;
  return o;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  CheckReport r("demo", 1e-8);
  r.finalize();
  CHECK_FALSE(r.passed);  // no trials
  r.record(1e-10, "a");
  r.record(5e-9, "b");
  r.finalize();
  CHECK(r.passed);
  CHECK(r.trials == 2);
  CHECK(r.max_rel_error == 5e-9);
  r.record(std::numeric_limits<double>::quiet_NaN());
  r.finalize();
  CHECK_FALSE(r.passed);

  CheckReport v("count", 0.0, Metric::violations);
  v.record(0.0);
  v.finalize();
  CHECK(v.passed);
  v.record(1.0);
  v.finalize();
  CHECK_FALSE(v.passed);
  CHECK(to_string(Metric::chi_square) == "chi_square");
}

TEST_CASE("merging and aggregation") {
  CheckReport a("x", 1.0);
  a.record(0.5);
  a.finalize();
  CheckReport b("y", 1.0);
  b.record(2.0);
  b.finalize();
  std::vector<CheckReport> all{a};
  CHECK(all_passed(all));
  merge_reports(all, {b});
  CHECK(all.size() == 2);
  CHECK_FALSE(all_passed(all));
  CHECK_FALSE(all_passed({}));
}

TEST_CASE("check names") {
  CHECK(check_names().size() == 9);
  for (const auto& n : check_names()) CHECK(is_check_name(n));
  CHECK_FALSE(is_check_name("everything"));
  CHECK_THROWS_AS(run_check("everything", quick()), InvalidArgument);
}

TEST_CASE("deterministic identities hold at small sizes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    dist::RngStream rng(17, n);
    require_all_pass(check_resolvent(n, 5, rng));
    require_all_pass(check_product_identities(n, 5, rng));
    require_all_pass(check_det_identities(n, 5, rng));
    require_all_pass(check_interlace_relations(n, 5, rng));
  }
  dist::RngStream rng(18, 0);
  for (auto c : {JacobianCase::tridiagonal, JacobianCase::unitary, JacobianCase::real_orthogonal})
    require_all_pass({check_jacobians(c, 2, 3, rng)});
  require_all_pass(check_In_recurrence(2.0, 1.0));
}

TEST_CASE("suite entry points pass with reduced sample sizes") {
  for (const auto& name : check_names()) {
    CAPTURE(name);
    require_all_pass(run_check(name, quick()));
  }
}

TEST_CASE("suite output is deterministic") {
  auto o = quick();
  const auto a = run_check("cross_samplers", o);
  const auto b = run_check("cross_samplers", o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].max_rel_error == b[i].max_rel_error);
  CHECK(a.front().details.empty());
  o.keep_details = true;
  CHECK_FALSE(run_check("resolvent", o).front().details.empty());
}

TEST_CASE("goodness-of-fit reports carry p-values") {
  const auto reports = check_conditional_densities(ConditionalCase::circle_pair, 20000, 5);
  bool saw_chi = false;
  for (const auto& r : reports)
    if (r.metric == Metric::chi_square) {
      saw_chi = true;
      REQUIRE(r.p_value.has_value());
      CHECK(*r.p_value > kPerTestAlpha);
      CHECK(r.max_rel_error <= r.tolerance);
    }
  CHECK(saw_chi);
}
