// Copyright 2026 The ADQC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "adqc/qmath.hpp"

/// Entangling gate generation: one ancilla couples to two register qubits
/// through exp(-i alpha Z(x)Z) in turn, with a local unitary U_a in between,
/// and is then measured. For register basis state |ij> the ancilla ends in
///
///   |a_ij> = Rz((-1)^j 2 alpha) U_a Rz((-1)^i 2 alpha) |a>,
///
/// and measuring |m> applies diag(<m|a_00>, <m|a_01>, <m|a_10>, <m|a_11>) to
/// the register. The ancilla is tensor factor 0, register qubit 1 couples
/// first (index i) and register qubit 2 second (index j).
namespace adqc {

/// Ancilla preparation cos(t'/2)|0> + sin(t'/2)|1>, coupling alpha, and
/// placement of the two intermediate states at polar angles t -+ 2 beta on
/// the x-z plane.
struct EggConfig {
  double alpha = kPi / 16.0;
  double theta_prep = kPi / 2.0;
  double theta_mid = kPi / 2.0;
  /// U_a. When empty, aligning_intermediate(theta_prep, alpha, theta_mid).
  std::optional<Unitary2> intermediate;
  /// When empty, midpoint_measurement of the resulting ring.
  std::optional<Basis> measurement;

  /// Throws std::invalid_argument unless alpha is in (0, pi/4] and the
  /// angles are finite.
  void validate() const;

  /// The worked operating point: intermediate states split by 2 beta about
  /// |+> (theta_mid = pi/2), preparation angle chosen so that the effective
  /// coupling is beta, automatic measurement. For beta = alpha this is
  /// |a> = |+>, U_a = Rx(pi/2).
  static EggConfig symmetric(double alpha, double beta);
};

/// Half the opening angle of the two post-interaction points:
/// sin(2 beta) = sin(theta') sin(2 alpha), beta in [0, alpha].
double effective_beta(double theta_prep, double alpha);

/// Inverse of effective_beta on theta' in [0, pi/2].
double preparation_angle_for(double beta, double alpha);

/// The SU(2) rotation (canonical sign, Re Tr >= 0) that takes
/// Rz(+-2 alpha)|a(theta')> onto the x-z plane at polar angles
/// theta_mid -+ 2 beta.
Unitary2 aligning_intermediate(double theta_prep, double alpha, double theta_mid);

/// SO(3) rotation to SU(2) with Re Tr >= 0.
Unitary2 su2_from_rotation(const Eigen::Matrix3d& rotation);

struct AncillaTrajectory {
  double alpha = 0.0;
  std::array<Qubit, 2> intermediate_states;
  /// Index 2 i + j.
  std::array<Qubit, 4> final_states;
  std::array<BlochPoint, 4> bloch;
  /// gamma / 2 with |<m|a_ij>|^2 = cos^2(gamma/2); empty when no ring.
  std::optional<double> cap_half_angle;
};

AncillaTrajectory final_ancilla_states(const EggConfig& cfg);

/// |a_ij> = Rz((-1)^j 2 alpha) Rx(pi/2) Rz((-1)^i 2 beta) |+>: the symmetric
/// preset with the preparation folded into an effective first coupling beta.
AncillaTrajectory symmetric_final_states(double alpha, double beta);

/// {|m>, |m_perp>} with |m> on the axis of the ring through the four final
/// states, on the hemisphere of the ring (an equatorial ring picks +z, then
/// +x, then +y). Throws DegenerateRing with fewer than three distinct points
/// and NotCoplanar when the fourth point leaves the plane by more than tol.
Basis midpoint_measurement(const AncillaTrajectory& t, double tol = 1e-8);

/// phi[i][j]
using PhaseTable = std::array<std::array<double, 2>, 2>;

struct EggOutcome {
  PhaseTable phi{};
  /// (phi_11 - phi_10) - (phi_01 - phi_00) in (-pi, pi].
  double Phi = 0.0;
  double probability = 0.0;
  int measurement_outcome = 0;
};

using EggOutcomePair = std::array<EggOutcome, 2>;

/// Per-outcome diagonal register gate. Throws UnequalMagnitudes when some
/// |<m|a_ij>| differ by more than tol (the measurement would leak register
/// information).
EggOutcomePair register_unitary(const AncillaTrajectory& t, const Basis& basis,
                                double tol = 1e-8);

double entangling_phase(const PhaseTable& phi);

/// diag(e^{i phi_ij}) = (diag(e^{i a1}, e^{i a2}) (x) diag(e^{i b1}, e^{i b2}))
///                      diag(1, 1, 1, e^{i Phi}),  gauge a1 = 0.
struct LocalReduction {
  double a1 = 0.0;
  double a2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double Phi = 0.0;

  /// The same diagonal written with a C-Rz(Phi) core: a2 absorbs Phi / 2.
  double a2_for_crz() const { return a2 + Phi / 2.0; }
};

LocalReduction local_reduction(const PhaseTable& phi);

/// diag(1, 1, 1, e^{i phi}).
Unitary4 controlled_phase(double phi);
Unitary4 diagonal_gate(const PhaseTable& phi);

/// Closed-form outcomes of the symmetric preset:
///   <+|a_00> = (cos A - i cos B) / sqrt 2,  <-|a_00> = (-i sin A - sin B) / sqrt 2
/// with A = alpha + beta, B = alpha - beta, the remaining phases following
/// from A, B -> (-B, -A), (B, A), (-A, -B). Phi_+- = 4 phi_00^+- + pi.
EggOutcomePair symmetric_outcomes_analytic(double alpha, double beta);

struct ScanRow {
  double beta = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
  double delta_phi = 0.0;  // wrap(Phi_+ - Phi_-)
  double p_plus = 0.0;
  double p_minus = 0.0;
  double success_prob = 0.0;  // 2 p_+ p_-
};

/// Symmetric preset at one beta, through the state-level pipeline.
ScanRow evaluate_symmetric(double alpha, double beta);

/// `samples` evenly spaced points on [beta_lo, beta_hi], inclusive.
std::vector<ScanRow> phi_scan(double alpha, double beta_lo, double beta_hi, int samples);

/// Smallest beta in [beta_lo, beta_hi] with |delta_phi| = pi: sign-change
/// scan of sin(delta_phi) over 512 intervals (restricted to cos < 0), then
/// bisection to 1e-10 in beta. Throws NoRoot when no crossing exists.
double find_balanced_beta(double alpha, double beta_lo, double beta_hi);
double find_balanced_beta(double alpha);

struct RusAttempt {
  int first_outcome = 0;
  int second_outcome = 0;
  double combined_phi = 0.0;
  bool success = false;
};

struct RusResult {
  int attempts = 0;
  bool success = false;
  std::vector<RusAttempt> log;
};

/// Repeat-until-success CZ: each attempt runs the gate twice, the second
/// time with Phi -> -Phi, so the net phase is Phi_m1 - Phi_m2: +-pi when the
/// outcomes differ (success), 0 otherwise (identity, nothing to undo).
/// Throws std::invalid_argument unless |delta_phi(beta_star)| = pi within 1e-6.
RusResult run_rus(double alpha, double beta_star, Rng& rng, int max_attempts);

/// a x + b y + c z + d = 0 through three points.
struct Plane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  /// True when the determinant D vanished and the cross-product form was used.
  bool fallback = false;
};

/// Cramer's rule with d = D. When |D| < 1e-12 (plane through the origin),
/// falls back to (a, b, c) = -(p2 - p1) x (p3 - p1), d = -(a, b, c) . p1, which
/// is the same scaling. Throws CollinearPoints when the cross product is
/// below 1e-12.
Plane plane_coefficients(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                         const Eigen::Vector3d& p3);

/// |a x4 + b y4 + c z4 + d| for the plane through p1..p3 (not normalized).
double coplanarity_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                            const Eigen::Vector3d& p3, const Eigen::Vector3d& p4);

/// Closed form of the same quantity for points (theta2, phi1), (theta2, phi2),
/// (theta4, phi3), (theta4, phi4) with phi2 - phi1 = phi4 - phi3:
///   2 (cos t2 - cos t4) [cos(phi2 - s) - cos(phi1 - s)] sin t2 sin t4 sin((phi3 - phi4)/2)
/// with s = (phi3 + phi4) / 2. Signed. Throws ConstraintViolated when the
/// azimuth differences disagree by more than 1e-9.
double constrained_distance(double theta2, double theta4, double phi1, double phi2,
                            double phi3, double phi4);

/// phi1 = phi3 + n pi within tol.
bool vertical_plane_check(double phi1, double phi3, double tol);

}  // namespace adqc
