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

#ifndef CIRCBETA_VERIFY_HPP
#define CIRCBETA_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circbeta/distributions.hpp"

// Numerical verification lab. Every check returns one CheckReport per
// identity it exercises; a report passes iff its worst value stays within
// its tolerance. What "value" means depends on the metric:
//
//   relative_error  |lhs - rhs| / max(|lhs|, |rhs|, 1e-300), per trial
//   chi_square      Pearson statistic, tolerance = critical value
//   z_score         |mean_1 - mean_2| / combined standard error
//   violations      count of failed structural predicates (tolerance 0)
//   abs_error       plain absolute deviation
namespace circbeta::verify {

enum class Metric { relative_error, abs_error, chi_square, z_score, violations };

std::string to_string(Metric metric);

struct TrialRecord {
  std::size_t index = 0;
  double value = 0.0;
  std::string label;
};

struct CheckReport {
  std::string check;
  std::size_t trials = 0;
  double max_rel_error = 0.0;  ///< worst value of `metric` (name kept for the report schema)
  double tolerance = 0.0;
  bool passed = false;
  Metric metric = Metric::relative_error;
  std::optional<double> p_value;
  std::string note;
  std::vector<TrialRecord> details;

  CheckReport() = default;
  CheckReport(std::string name, double tol, Metric m = Metric::relative_error);

  /// Adds one trial. NaN values count as failures.
  void record(double value, std::string label = {});
  /// Recomputes `passed` from the worst value and the tolerance.
  void finalize();
};

/// Family-wise significance level of the goodness-of-fit checks and the
/// number of such tests it is split across (Bonferroni).
inline constexpr double kFamilyAlpha = 0.01;
inline constexpr std::size_t kGoodnessOfFitTests = 4;
inline constexpr double kPerTestAlpha = kFamilyAlpha / static_cast<double>(kGoodnessOfFitTests);

/// Trace-moment comparisons pass within this many combined standard errors.
inline constexpr double kZTolerance = 4.0;

// ---- deterministic identities -------------------------------------------

/// First resolvent entry versus its eigen-expansion for tridiagonal,
/// unitary Hessenberg and 2n x 2n real orthogonal Hessenberg matrices.
std::vector<CheckReport> check_resolvent(std::size_t n, std::size_t trials, dist::RngStream& rng);

/// Discriminant and endpoint-product identities. n is the matrix size for
/// the tridiagonal and unitary cases and the half size for real orthogonal.
std::vector<CheckReport> check_product_identities(std::size_t n, std::size_t trials, dist::RngStream& rng);

/// The three confluent determinant evaluations (real, unimodular, and the
/// inversion-antisymmetric variant), 1 <= n <= 6.
std::vector<CheckReport> check_det_identities(std::size_t n, std::size_t trials, dist::RngStream& rng);

enum class JacobianCase { tridiagonal, unitary, real_orthogonal };

/// Central-difference Jacobian of parameters -> (sorted eigenvalues, first
/// components) compared with the closed-form Jacobian, n in {2, 3}.
CheckReport check_jacobians(JacobianCase which, std::size_t n, std::size_t trials, dist::RngStream& rng);

/// Residue and product relations between the angles before and after the
/// row-scaling perturbation, interlacing, and continuity as t -> 1.
std::vector<CheckReport> check_interlace_relations(std::size_t n, std::size_t trials, dist::RngStream& rng);

// ---- integrals ------------------------------------------------------------

/// Quadrature values of I_1 and I_2 against the recurrence chain and the
/// closed gamma product. Throws InvalidArgument if I_2 diverges.
std::vector<CheckReport> check_In_recurrence(double gamma, double d);

// ---- statistical checks ---------------------------------------------------

enum class ConditionalCase {
  circle_uniform,  ///< perturbed angle of a single point: uniform
  circle_pair,     ///< two perturbed angles given two fixed angles
  cauchy_pair,     ///< three zeros on the line given two poles
  dixon_anderson,  ///< one zero between two poles
};

/// Samples the random construction M times, bins the outcome and runs a
/// chi-square test against cell probabilities integrated from the density.
/// Also reports how well the integrated density sums to one.
std::vector<CheckReport> check_conditional_densities(ConditionalCase which, std::size_t M, std::uint64_t seed);

/// Two distinct constructions of the same eigenvalue law compared on the
/// trace moments p = 1, 2.
std::vector<CheckReport> check_cross_samplers(std::size_t M, std::uint64_t seed);

/// Interlacing and product invariants of joint draws, and realness of the
/// three-term recurrence zeros.
std::vector<CheckReport> check_structural(std::size_t M, std::uint64_t seed);

// ---- suite ---------------------------------------------------------------

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;                ///< per matrix size, deterministic identities
  std::size_t jacobian_points = 20;        ///< base points per size
  std::size_t conditional_samples = 100000;
  std::size_t cross_samples = 20000;
  std::size_t structural_samples = 10000;
  bool keep_details = false;
};

/// Names accepted by run_check, in suite order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

/// Runs one named check over the suite's sizes and merges reports that
/// share a name. Throws InvalidArgument for unknown names.
std::vector<CheckReport> run_check(const std::string& name, const SuiteOptions& options);

bool all_passed(const std::vector<CheckReport>& reports);

/// Appends `more` to `into`, merging reports whose check name already occurs.
void merge_reports(std::vector<CheckReport>& into, const std::vector<CheckReport>& more);

}  // namespace circbeta::verify

#endif  // CIRCBETA_VERIFY_HPP
