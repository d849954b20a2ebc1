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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

#include "circbeta/error.hpp"
#include "circbeta/verify.hpp"

namespace circbeta::verify {

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::relative_error: return "relative_error";
    case Metric::abs_error: return "abs_error";
    case Metric::chi_square: return "chi_square";
    case Metric::z_score: return "z_score";
    case Metric::violations: return "violations";
  }
  return "unknown";
}

CheckReport::CheckReport(std::string name, double tol, Metric m) : check(std::move(name)), tolerance(tol), metric(m) {}

void CheckReport::record(double value, std::string label) {
  details.push_back({trials, value, std::move(label)});
  ++trials;
  // NaN must never compare as "within tolerance".
  if (std::isnan(value) || std::isnan(max_rel_error))
    max_rel_error = std::numeric_limits<double>::quiet_NaN();
  else
    max_rel_error = std::max(max_rel_error, value);
  finalize();
}

void CheckReport::finalize() { passed = trials > 0 && max_rel_error <= tolerance; }

namespace {

// FNV-1a, used to give every check its own seed family.
std::uint64_t name_tag(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

dist::RngStream check_stream(const SuiteOptions& o, std::string_view name, std::uint64_t index) {
  return dist::RngStream(dist::splitmix64(o.seed ^ name_tag(name)), index);
}

std::uint64_t check_seed(const SuiteOptions& o, std::string_view name) {
  return dist::splitmix64(o.seed ^ name_tag(name));
}

template <class F>
std::vector<CheckReport> over_sizes(const SuiteOptions& o, std::string_view name, std::size_t lo, std::size_t hi,
                                    F&& f) {
  std::vector<CheckReport> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto rng = check_stream(o, name, n);
    merge_reports(out, f(n, rng));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "resolvent", "product_identities", "det_identities",        "jacobians",      "interlace",
      "In_recurrence", "conditional_densities", "cross_samplers", "structural",
  };
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

void merge_reports(std::vector<CheckReport>& into, const std::vector<CheckReport>& more) {
  for (const auto& r : more) {
    auto it = std::find_if(into.begin(), into.end(), [&](const CheckReport& x) { return x.check == r.check; });
    if (it == into.end()) {
      into.push_back(r);
      continue;
    }
    for (const auto& d : r.details) it->details.push_back({it->trials + d.index, d.value, d.label});
    it->trials += r.trials;
    if (std::isnan(r.max_rel_error) || std::isnan(it->max_rel_error))
      it->max_rel_error = std::numeric_limits<double>::quiet_NaN();
    else
      it->max_rel_error = std::max(it->max_rel_error, r.max_rel_error);
    it->tolerance = std::max(it->tolerance, r.tolerance);
    if (r.p_value) it->p_value = it->p_value ? std::min(*it->p_value, *r.p_value) : *r.p_value;
    if (!r.note.empty() && it->note.find(r.note) == std::string::npos)
      it->note += (it->note.empty() ? "" : "; ") + r.note;
    it->finalize();
  }
}

std::vector<CheckReport> run_check(const std::string& name, const SuiteOptions& o) {
  std::vector<CheckReport> out;
  if (name == "resolvent") {
    out = over_sizes(o, name, 1, 6, [&](std::size_t n, dist::RngStream& rng) { return check_resolvent(n, o.trials, rng); });
  } else if (name == "product_identities") {
    out = over_sizes(o, name, 1, 6,
                     [&](std::size_t n, dist::RngStream& rng) { return check_product_identities(n, o.trials, rng); });
  } else if (name == "det_identities") {
    out = over_sizes(o, name, 1, 5,
                     [&](std::size_t n, dist::RngStream& rng) { return check_det_identities(n, o.trials, rng); });
  } else if (name == "jacobians") {
    for (auto which : {JacobianCase::tridiagonal, JacobianCase::unitary, JacobianCase::real_orthogonal}) {
      for (std::size_t n = 2; n <= 3; ++n) {
        auto rng = check_stream(o, name, 16 * static_cast<std::uint64_t>(which) + n);
        merge_reports(out, {check_jacobians(which, n, o.jacobian_points, rng)});
      }
    }
  } else if (name == "interlace") {
    out = over_sizes(o, name, 1, 6,
                     [&](std::size_t n, dist::RngStream& rng) { return check_interlace_relations(n, o.trials, rng); });
  } else if (name == "In_recurrence") {
    merge_reports(out, check_In_recurrence(2.0, 1.0));
    merge_reports(out, check_In_recurrence(1.5, 0.5));
    merge_reports(out, check_In_recurrence(1.0, 0.25));
  } else if (name == "conditional_densities") {
    const std::uint64_t base = check_seed(o, name);
    for (auto which : {ConditionalCase::circle_uniform, ConditionalCase::circle_pair, ConditionalCase::cauchy_pair,
                       ConditionalCase::dixon_anderson})
      merge_reports(out, check_conditional_densities(which, o.conditional_samples,
                                                     dist::splitmix64(base + static_cast<std::uint64_t>(which))));
  } else if (name == "cross_samplers") {
    out = check_cross_samplers(o.cross_samples, check_seed(o, name));
  } else if (name == "structural") {
    out = check_structural(o.structural_samples, check_seed(o, name));
  } else {
    throw InvalidArgument("unknown check '" + name + "'");
  }
  if (!o.keep_details)
    for (auto& r : out) r.details.clear();
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return !reports.empty() &&
         std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace circbeta::verify
