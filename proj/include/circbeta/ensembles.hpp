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

#ifndef CIRCBETA_ENSEMBLES_HPP
#define CIRCBETA_ENSEMBLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circbeta/distributions.hpp"
#include "circbeta/linalg.hpp"

namespace circbeta::ens {

using AngleSet = std::vector<double>;

enum class EnsembleKind {
  cbe,              ///< circular beta ensemble via Schur parameters
  circular_jacobi,  ///< three-term recurrence + Cayley map
  joint,            ///< eigen-angles before and after the row-scaling perturbation
  haar,             ///< eigen-angles of a QR-orthonormalized Gaussian matrix
  doubled_cue,      ///< all 2n angles of the 2x2-real representation of a Haar matrix
  cse_dual,         ///< independent angles of U^D U
  coe_union,        ///< every second angle of two superposed COE_n spectra
  coe_2n,           ///< every second angle of a COE_2n spectrum
};

std::string to_string(EnsembleKind kind);
/// Throws InvalidArgument for unknown names.
EnsembleKind parse_kind(const std::string& name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::cbe;
  std::size_t n = 1;
  double beta = 2.0;  ///< cbe, joint
  double a = 0.0;     ///< circular_jacobi
  double d = 1.0;     ///< circular_jacobi
  std::uint64_t seed = 0;
  std::size_t M = 1;

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;
  /// Number of angles in one draw (2n for doubled_cue, n otherwise).
  std::size_t angles_per_draw() const;
};

/// M angle-sets, each sorted ascending in (0, 2pi]. For the joint ensemble
/// `companions` holds the perturbed angles and `t_angles` the arguments of t.
struct SampleBatch {
  EnsembleSpec spec;
  std::vector<AngleSet> draws;
  std::vector<AngleSet> companions;
  std::vector<double> t_angles;
  /// Ordered key/value reproduction metadata (no timestamps).
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Ordered reproduction metadata of a spec (ensemble parameters, seed,
/// generator and library version).
std::vector<std::pair<std::string, std::string>> spec_metadata(const EnsembleSpec& spec);

/// Draw i uses RngStream(spec.seed, i), so batches are reproducible and
/// any sub-range can be regenerated independently.
SampleBatch sample_batch(const EnsembleSpec& spec);

/// alpha_{n-j-1} ~ Theta_{beta j + 1}, j = 0..n-1, drawn in that order.
std::vector<cplx> draw_cbe_parameters(std::size_t n, double beta, dist::RngStream& rng);

AngleSet sample_cbe(std::size_t n, double beta, dist::RngStream& rng);

struct CircularJacobiDraw {
  AngleSet angles;
  std::vector<double> real_roots;  ///< descending, before the Cayley map
  double max_abs_imag = 0.0;       ///< largest |Im| among companion roots
};

/// Angles distributed as the circular Jacobi ensemble with weight
/// |1 - e^{i theta}|^a and Vandermonde exponent 2d.
CircularJacobiDraw sample_circular_jacobi(std::size_t n, double a, double d, dist::RngStream& rng);

/// One recurrence sweep to order n_max; element j-1 holds the order-j draw.
std::vector<CircularJacobiDraw> circular_jacobi_sweep(std::size_t n_max, double a, double d,
                                                      dist::RngStream& rng);

struct JointDraw {
  AngleSet theta;
  AngleSet psi;
  cplx t;
  std::vector<cplx> alphas;
};

JointDraw sample_joint_perturbed(std::size_t n, double beta, dist::RngStream& rng);

/// Haar-distributed unitary matrix (QR with positive diagonal of R).
linalg::ComplexSquareMatrix sample_haar(std::size_t n, dist::RngStream& rng);
AngleSet sample_haar_angles(std::size_t n, dist::RngStream& rng);

/// Spectrum of the 2n x 2n real representation of a Haar U(n) matrix.
AngleSet sample_doubled_cue(std::size_t n, dist::RngStream& rng);

/// Merged eigen-data of U^D U for Haar U in U(2n).
linalg::UnitEigenData sample_cse_dual_eigen(std::size_t n, dist::RngStream& rng);
AngleSet sample_cse_dual(std::size_t n, dist::RngStream& rng);

/// Every second angle of a 2n-point COE configuration, starting parity
/// uniformly random. kind must be coe_union or coe_2n.
AngleSet superpose_and_decimate(EnsembleKind kind, std::size_t n, dist::RngStream& rng);

/// One draw of the given ensemble (companion filled only for joint).
AngleSet sample_one(const EnsembleSpec& spec, dist::RngStream& rng, AngleSet* companion = nullptr,
                    double* t_angle = nullptr);

/// |sum_j e^{i p theta_j}|^2.
double trace_power_moment(const AngleSet& angles, int p);

}  // namespace circbeta::ens

#endif  // CIRCBETA_ENSEMBLES_HPP
