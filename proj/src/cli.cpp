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

#include "circbeta/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circbeta/error.hpp"
#include "circbeta/format.hpp"
#include "circbeta/numeric.hpp"
#include "circbeta/version.hpp"

namespace circbeta::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

void write_metadata(const std::vector<std::pair<std::string, std::string>>& md, std::ostream& os) {
  for (const auto& [k, v] : md) os << "# " << k << ": " << v << '\n';
}

std::vector<std::pair<std::string, std::string>> table1_metadata(const Table1& t) {
  return {{"table", "trace moments of Haar eigenvalues"},
          {"m", std::to_string(t.M)},
          {"seed", std::to_string(t.seed)},
          {"generator", dist::generator_id()},
          {"version", kVersion}};
}

}  // namespace

void write_batch_csv(const ens::SampleBatch& batch, std::ostream& os) {
  write_metadata(batch.metadata, os);
  const bool joint = batch.spec.kind == ens::EnsembleKind::joint;
  os << (joint ? "sample_index,kind,angle_index,theta\n" : "sample_index,angle_index,theta\n");
  for (std::size_t i = 0; i < batch.draws.size(); ++i) {
    const auto& draw = batch.draws[i];
    for (std::size_t j = 0; j < draw.size(); ++j) {
      os << i << ',';
      if (joint) os << "theta,";
      os << j << ',' << format_g17(draw[j]) << '\n';
    }
    if (joint) {
      const auto& psi = batch.companions[i];
      for (std::size_t j = 0; j < psi.size(); ++j) os << i << ",psi," << j << ',' << format_g17(psi[j]) << '\n';
    }
  }
}

void write_batch_json(const ens::SampleBatch& batch, std::ostream& os) {
  ordered_json doc;
  ordered_json md = ordered_json::object();
  for (const auto& [k, v] : batch.metadata) md[k] = v;
  doc["metadata"] = md;
  doc["samples"] = batch.draws;
  if (batch.spec.kind == ens::EnsembleKind::joint) {
    doc["psi"] = batch.companions;
    doc["t_angle"] = batch.t_angles;
  }
  os << doc.dump(1) << '\n';
}

std::vector<MomentEstimate> estimate_moments(const ens::EnsembleSpec& spec, const std::vector<int>& powers) {
  spec.validate();
  std::vector<num::RunningStats> stats(powers.size());
  for (std::size_t i = 0; i < spec.M; ++i) {
    dist::RngStream rng(spec.seed, i);
    const auto angles = ens::sample_one(spec, rng);
    for (std::size_t k = 0; k < powers.size(); ++k) stats[k].add(ens::trace_power_moment(angles, powers[k]));
  }
  std::vector<MomentEstimate> out;
  for (std::size_t k = 0; k < powers.size(); ++k)
    out.push_back({powers[k], stats[k].mean(), stats[k].stderr_of_mean(), spec.M});
  return out;
}

Table1 compute_table1(std::size_t M, std::size_t n_min, std::size_t n_max, int p_max, std::uint64_t seed) {
  if (M < 1) throw InvalidArgument("table1: M must be >= 1");
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("table1: need 1 <= n_min <= n_max");
  if (p_max < 1) throw InvalidArgument("table1: p_max must be >= 1");
  Table1 t;
  t.M = M;
  t.seed = seed;
  for (std::size_t n = n_min; n <= n_max; ++n) t.orders.push_back(n);
  for (int p = 1; p <= p_max; ++p) t.powers.push_back(p);

  std::vector<std::vector<num::RunningStats>> stats(t.powers.size(), std::vector<num::RunningStats>(t.orders.size()));
  for (std::size_t i = 0; i < M; ++i) {
    dist::RngStream rng(seed, i);
    // a = 0, d = 1: the recurrence zeros are distributed as Haar eigenvalues.
    const auto sweep = ens::circular_jacobi_sweep(n_max, 0.0, 1.0, rng);
    for (std::size_t c = 0; c < t.orders.size(); ++c) {
      const auto& angles = sweep[t.orders[c] - 1].angles;
      for (std::size_t r = 0; r < t.powers.size(); ++r) stats[r][c].add(ens::trace_power_moment(angles, t.powers[r]));
    }
  }
  t.stderr_degenerate = M < 2;
  for (const auto& row : stats) {
    std::vector<double> est;
    std::vector<double> se;
    for (const auto& s : row) {
      est.push_back(s.mean());
      se.push_back(s.stderr_of_mean());
    }
    t.estimate.push_back(std::move(est));
    t.stderr_of_mean.push_back(std::move(se));
  }
  return t;
}

void write_table1_text(const Table1& t, std::ostream& os) {
  auto block = [&](const char* title, const std::vector<std::vector<double>>& v) {
    os << title << " (M = " << t.M << ")\n" << std::setw(6) << "p\\N";
    for (auto n : t.orders) os << std::setw(10) << n;
    os << '\n';
    for (std::size_t r = 0; r < t.powers.size(); ++r) {
      os << std::setw(6) << t.powers[r];
      for (double x : v[r]) {
        std::ostringstream cell;
        cell.imbue(std::locale::classic());
        cell << std::fixed << std::setprecision(4) << x;
        os << std::setw(10) << cell.str();
      }
      os << '\n';
    }
  };
  block("estimate", t.estimate);
  os << '\n';
  block("stderr", t.stderr_of_mean);
  if (t.stderr_degenerate) os << "note: M < 2, standard errors are undefined and reported as 0\n";
}

void write_table1_csv(const Table1& t, std::ostream& os) {
  write_metadata(table1_metadata(t), os);
  os << "p,N,estimate,stderr,stderr_degenerate\n";
  for (std::size_t r = 0; r < t.powers.size(); ++r)
    for (std::size_t c = 0; c < t.orders.size(); ++c)
      os << t.powers[r] << ',' << t.orders[c] << ',' << format_g17(t.estimate[r][c]) << ','
         << format_g17(t.stderr_of_mean[r][c]) << ',' << (t.stderr_degenerate ? 1 : 0) << '\n';
}

std::string verify_report_json(const std::vector<verify::CheckReport>& reports, std::uint64_t seed,
                               bool with_details) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["seed"] = seed;
  doc["passed"] = verify::all_passed(reports);
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["check"] = r.check;
    j["trials"] = r.trials;
    j["max_rel_error"] = r.max_rel_error;  // NaN is written as null
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["metric"] = verify::to_string(r.metric);
    if (r.p_value) j["p_value"] = *r.p_value;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_details) {
      ordered_json d = ordered_json::array();
      for (const auto& t : r.details) d.push_back({{"index", t.index}, {"value", t.value}, {"label", t.label}});
      j["details"] = d;
    }
    list.push_back(j);
  }
  doc["reports"] = list;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

// Writes `text` to `path` (or stdout for an empty path). Returns false on
// I/O failure.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.close();
  return static_cast<bool>(f);
}

struct EnsembleArgs {
  std::string ensemble = "cbe";
  std::size_t n = 4;
  double beta = 2.0;
  double a = 0.0;
  double d = 1.0;
  std::size_t m = 1000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";

  void attach(CLI::App* app) {
    app->add_option("--ensemble", ensemble, "cbe, circular_jacobi, joint, haar, doubled_cue, cse_dual, coe_union, coe_2n")
        ->capture_default_str();
    app->add_option("--n", n, "matrix size")->capture_default_str();
    app->add_option("--beta", beta, "Dyson index (cbe, joint)")->capture_default_str();
    app->add_option("--a", a, "one-point exponent (circular_jacobi)")->capture_default_str();
    app->add_option("--d", d, "half the Vandermonde exponent (circular_jacobi)")->capture_default_str();
    app->add_option("--m", m, "number of draws")->capture_default_str();
    app->add_option("--seed", seed, "master seed")->envname("RMT_SEED")->capture_default_str();
    app->add_option("--out", out, "output file (default: standard output)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  }

  ens::EnsembleSpec spec() const {
    ens::EnsembleSpec s;
    s.kind = ens::parse_kind(ensemble);
    s.n = n;
    s.beta = beta;
    s.a = a;
    s.d = d;
    s.M = m;
    s.seed = seed;
    s.validate();
    return s;
  }
};

int bad_arguments(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return kExitBadArguments;
}

int io_error(const std::string& path) {
  std::cerr << "error: cannot write '" << (path.empty() ? "<stdout>" : path) << "'\n";
  return kExitIoError;
}

int cmd_sample(const EnsembleArgs& args) {
  ens::EnsembleSpec spec;
  try {
    spec = args.spec();
  } catch (const InvalidArgument& e) {
    return bad_arguments(e.what());
  }
  const auto batch = ens::sample_batch(spec);
  std::ostringstream os;
  os.imbue(std::locale::classic());
  if (args.format == "json")
    write_batch_json(batch, os);
  else
    write_batch_csv(batch, os);
  return emit(args.out, os.str()) ? kExitOk : io_error(args.out);
}

int cmd_estimate(const EnsembleArgs& args, const std::vector<int>& powers) {
  ens::EnsembleSpec spec;
  try {
    spec = args.spec();
  } catch (const InvalidArgument& e) {
    return bad_arguments(e.what());
  }
  const auto est = estimate_moments(spec, powers);
  std::ostringstream os;
  if (args.format == "json") {
    ordered_json doc;
    ordered_json md = ordered_json::object();
    md["ensemble"] = ens::to_string(spec.kind);
    md["n"] = spec.n;
    md["m"] = spec.M;
    md["seed"] = spec.seed;
    md["generator"] = dist::generator_id();
    md["version"] = kVersion;
    doc["metadata"] = md;
    ordered_json rows = ordered_json::array();
    for (const auto& e : est) rows.push_back({{"p", e.p}, {"estimate", e.estimate}, {"stderr", e.stderr_of_mean}, {"M", e.M}});
    doc["moments"] = rows;
    os << doc.dump(2) << '\n';
  } else {
    write_metadata(ens::spec_metadata(spec), os);
    os << "p,estimate,stderr,M\n";
    for (const auto& e : est)
      os << e.p << ',' << format_g17(e.estimate) << ',' << format_g17(e.stderr_of_mean) << ',' << e.M << '\n';
  }
  return emit(args.out, os.str()) ? kExitOk : io_error(args.out);
}

int cmd_table1(std::size_t M, std::size_t n_min, std::size_t n_max, int p_max, std::uint64_t seed,
               const std::string& out) {
  Table1 t;
  try {
    t = compute_table1(M, n_min, n_max, p_max, seed);
  } catch (const InvalidArgument& e) {
    return bad_arguments(e.what());
  }
  write_table1_text(t, std::cout);
  if (out.empty()) return kExitOk;
  std::ostringstream os;
  write_table1_csv(t, os);
  return emit(out, os.str()) ? kExitOk : io_error(out);
}

int cmd_verify(std::vector<std::string> only, const verify::SuiteOptions& options, const std::string& out) {
  if (only.empty()) only = verify::check_names();
  for (const auto& name : only)
    if (!verify::is_check_name(name)) return bad_arguments("unknown check '" + name + "'");
  std::vector<verify::CheckReport> reports;
  for (const auto& name : only) verify::merge_reports(reports, verify::run_check(name, options));
  for (const auto& r : reports)
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.check << "  " << verify::to_string(r.metric) << '='
              << format_shortest(r.max_rel_error) << " tol=" << format_shortest(r.tolerance) << '\n';
  if (!emit(out, verify_report_json(reports, options.seed, options.keep_details))) return io_error(out);
  return verify::all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"circbeta: samplers and a verification lab for circular beta ensembles"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  EnsembleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "draw eigen-angle sets and write them as CSV or JSON");
  sample_args.attach(sample);

  EnsembleArgs est_args;
  std::vector<int> powers{1, 2};
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimates of E|sum_j e^{i p theta_j}|^2");
  est_args.attach(estimate);
  estimate->add_option("--p", powers, "powers p (comma separated)")->delimiter(',')->capture_default_str();

  std::size_t t_m = 5000;
  std::size_t t_nmin = 2;
  std::size_t t_nmax = 5;
  int t_pmax = 5;
  std::uint64_t t_seed = 0;
  std::string t_out;
  auto* table1 = app.add_subcommand("table1", "trace-moment table for Haar matrices of several sizes");
  table1->add_option("--m", t_m, "replicates")->capture_default_str();
  table1->add_option("--n-min", t_nmin, "smallest N")->capture_default_str();
  table1->add_option("--n-max", t_nmax, "largest N")->capture_default_str();
  table1->add_option("--p-max", t_pmax, "largest power p")->capture_default_str();
  table1->add_option("--seed", t_seed, "master seed")->envname("RMT_SEED")->capture_default_str();
  table1->add_option("--out", t_out, "also write the table as CSV to this file");

  std::vector<std::string> only;
  verify::SuiteOptions vopt;
  std::string v_out;
  auto* ver = app.add_subcommand("verify", "run the numerical verification suite");
  ver->add_option("--only", only, "checks to run (comma separated; default all)")->delimiter(',');
  ver->add_option("--seed", vopt.seed, "master seed")->envname("RMT_SEED")->capture_default_str();
  ver->add_option("--trials", vopt.trials, "random trials per size for identity checks")->capture_default_str();
  ver->add_flag("--details", vopt.keep_details, "include per-trial records in the report");
  ver->add_option("--out", v_out, "write the JSON report to this file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (sample->parsed()) return cmd_sample(sample_args);
    if (estimate->parsed()) return cmd_estimate(est_args, powers);
    if (table1->parsed()) return cmd_table1(t_m, t_nmin, t_nmax, t_pmax, t_seed, t_out);
    if (ver->parsed()) return cmd_verify(only, vopt, v_out);
  } catch (const InvalidArgument& e) {
    return bad_arguments(e.what());
  }
  return kExitBadArguments;
}

}  // namespace circbeta::cli
