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

// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circbeta/cli.hpp"
#include "circbeta/verify.hpp"

namespace fs = std::filesystem;
using circbeta::verify::CheckReport;
using circbeta::verify::SuiteOptions;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// Runs the named checks; every report must pass and must have been judged
// against a tolerance no looser than `max_tol` (ignored when negative).
// The cap applies to relative-error reports only; auxiliary absolute or
// counting checks keep their own tolerances.
Outcome suite(const std::vector<std::string>& names, const SuiteOptions& opts, double max_tol) {
  std::vector<CheckReport> all;
  for (const auto& n : names) circbeta::verify::merge_reports(all, circbeta::verify::run_check(n, opts));
  Outcome o{!all.empty(), {}};
  double worst = 0.0;
  std::string first_fail;
  for (const auto& r : all) {
    const bool tol_ok =
        max_tol < 0.0 || r.metric != circbeta::verify::Metric::relative_error || r.tolerance <= max_tol;
    if (!r.passed || !tol_ok) {
      o.pass = false;
      if (first_fail.empty()) first_fail = r.check + " (" + fmt(r.max_rel_error) + " vs " + fmt(r.tolerance) + ")";
    }
    if (r.metric == circbeta::verify::Metric::relative_error) worst = std::max(worst, r.max_rel_error);
  }
  o.detail = std::to_string(all.size()) + " reports";
  if (worst > 0.0) o.detail += ", worst relative error " + fmt(worst);
  if (!first_fail.empty()) o.detail += ", first failure " + first_fail;
  return o;
}

Outcome criterion_table1() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = circbeta::cli::compute_table1(5000, 2, 5, 5, kSeed);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst_z = 0.0;
  bool ok = secs < 60.0;
  for (std::size_t r = 0; r < t.powers.size(); ++r)
    for (std::size_t c = 0; c < t.orders.size(); ++c) {
      const double expected = static_cast<double>(std::min<std::size_t>(static_cast<std::size_t>(t.powers[r]), t.orders[c]));
      const double se = t.stderr_of_mean[r][c];
      if (!(se > 0.0)) {
        ok = false;
        continue;
      }
      worst_z = std::max(worst_z, std::abs(t.estimate[r][c] - expected) / se);
    }
  ok = ok && worst_z <= 4.0 && t.powers.size() == 5 && t.orders.size() == 4;
  return {ok, "max |z| " + fmt(worst_z) + " over 20 cells in " + fmt(secs) + " s"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_determinism() {
  const fs::path dir = CIRCBETA_TEST_TMPDIR;
  fs::create_directories(dir);
  const std::string exe = CIRCBETA_CLI_PATH;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"sample_cbe.csv", "sample --ensemble cbe --n 5 --beta 1.5 --m 200 --seed 11"},
      {"sample_joint.json", "sample --ensemble joint --n 4 --beta 2 --m 50 --seed 12 --format json"},
      {"sample_cj.csv", "sample --ensemble circular_jacobi --n 4 --a 1 --d 0.5 --m 100 --seed 13"},
      {"estimate.csv", "estimate --ensemble coe_2n --n 3 --m 500 --p 1,2,3 --seed 14"},
      {"table1.csv", "table1 --m 500 --seed 15"},
      {"verify.json", "verify --seed 16 --trials 20"},
  };
  for (const auto& [file, args] : commands) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (std::to_string(run) + "_" + file);
      fs::remove(out);
      const std::string cmd = "\"" + exe + "\" " + args + " --out \"" + out.string() + "\" >/dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + args};
      const std::string text = slurp(out);
      if (text.empty()) return {false, "empty output: " + args};
      if (run == 0)
        first = text;
      else if (text != first)
        return {false, "outputs differ: " + args};
    }
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical on rerun"};
}

}  // namespace

int main() {
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.trials = 100;
  opts.jacobian_points = 20;
  opts.conditional_samples = 100000;
  opts.cross_samples = 20000;
  opts.structural_samples = 10000;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"trace moments of Haar eigenvalues (M = 5000)", criterion_table1},
      {"resolvent, product and interlacing identities",
       [&] { return suite({"resolvent", "product_identities", "interlace"}, opts, 1e-8); }},
      {"determinant evaluations", [&] { return suite({"det_identities"}, opts, 1e-8); }},
      {"finite-difference Jacobians", [&] { return suite({"jacobians"}, opts, 1e-5); }},
      {"I_n quadrature vs recurrence and closed form", [&] { return suite({"In_recurrence"}, opts, 1e-6); }},
      {"conditional densities (chi-square)", [&] { return suite({"conditional_densities"}, opts, -1.0); }},
      {"cross-sampler trace moments", [&] { return suite({"cross_samplers"}, opts, -1.0); }},
      {"structural invariants", [&] { return suite({"structural"}, opts, -1.0); }},
      {"byte-identical reruns", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " -- "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
