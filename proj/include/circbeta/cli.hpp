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

#ifndef CIRCBETA_CLI_HPP
#define CIRCBETA_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "circbeta/ensembles.hpp"
#include "circbeta/verify.hpp"

namespace circbeta::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadArguments = 2,
  kExitIoError = 3,
};

enum class Format { csv, json };

/// Version tag of the verification report layout.
inline constexpr const char* kReportSchema = "circbeta.verify/1";

struct RunConfig {
  ens::EnsembleSpec spec;
  std::string out;  ///< empty: standard output
  Format format = Format::csv;
};

struct MomentEstimate {
  int p = 0;
  double estimate = 0.0;
  double stderr_of_mean = 0.0;
  std::size_t M = 0;
};

/// CSV with '#'-prefixed metadata lines. Angles use 17 significant digits.
void write_batch_csv(const ens::SampleBatch& batch, std::ostream& os);
void write_batch_json(const ens::SampleBatch& batch, std::ostream& os);

/// Mean and standard error of |sum_j e^{i p theta_j}|^2 over spec.M draws.
std::vector<MomentEstimate> estimate_moments(const ens::EnsembleSpec& spec, const std::vector<int>& powers);

struct Table1 {
  std::size_t M = 0;
  std::vector<std::size_t> orders;  ///< N values (columns)
  std::vector<int> powers;          ///< p values (rows)
  std::vector<std::vector<double>> estimate;  ///< [p][N]
  std::vector<std::vector<double>> stderr_of_mean;
  bool stderr_degenerate = false;  ///< M < 2: standard errors reported as 0
  std::uint64_t seed = 0;
};

/// Trace moments of Haar eigenvalues for every N in [n_min, n_max]: each
/// replicate is one recurrence sweep to n_max whose intermediate orders
/// supply the smaller N.
Table1 compute_table1(std::size_t M, std::size_t n_min, std::size_t n_max, int p_max, std::uint64_t seed);
void write_table1_text(const Table1& t, std::ostream& os);
void write_table1_csv(const Table1& t, std::ostream& os);

/// JSON document for a list of verification reports.
std::string verify_report_json(const std::vector<verify::CheckReport>& reports, std::uint64_t seed,
                               bool with_details);

/// Parses the command line and runs the selected subcommand.
int run(int argc, char** argv);

}  // namespace circbeta::cli

#endif  // CIRCBETA_CLI_HPP
