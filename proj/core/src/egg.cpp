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

#include "adqc/egg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adqc/errors.hpp"

namespace adqc {
namespace {

constexpr Complex kI{0.0, 1.0};

Qubit prepared_ancilla(double theta_prep) {
  return Qubit::unchecked(
      Vector<2>(Complex(std::cos(theta_prep / 2.0)), Complex(std::sin(theta_prep / 2.0))));
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= kPi / 4.0)) {
    throw std::invalid_argument("alpha must lie in (0, pi/4]");
  }
}

Eigen::Matrix3d frame(const Eigen::Vector3d& m, const Eigen::Vector3d& c) {
  Eigen::Matrix3d f;
  f.col(0) = m;
  f.col(1) = c;
  f.col(2) = m.cross(c);
  return f;
}

AncillaTrajectory trajectory_from(double alpha, const std::array<Qubit, 2>& intermediate) {
  AncillaTrajectory t;
  t.alpha = alpha;
  t.intermediate_states = intermediate;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double sign = j == 0 ? 1.0 : -1.0;
      const Qubit s = apply(rz(sign * 2.0 * alpha), intermediate[i]);
      t.final_states[2 * i + j] = s;
      t.bloch[2 * i + j] = state_to_bloch(s);
    }
  }
  return t;
}

void attach_cap(AncillaTrajectory& t, const std::optional<Basis>& basis) {
  try {
    const Basis b = basis ? *basis : midpoint_measurement(t);
    t.cap_half_angle = std::acos(std::clamp(std::abs(inner(b.first(), t.final_states[0])), 0.0, 1.0));
  } catch (const NumericError&) {
    t.cap_half_angle.reset();
  }
}

}  // namespace

void EggConfig::validate() const {
  require_alpha(alpha);
  if (!std::isfinite(theta_prep) || !std::isfinite(theta_mid)) {
    throw std::invalid_argument("angles must be finite");
  }
}

EggConfig EggConfig::symmetric(double alpha, double beta) {
  require_alpha(alpha);
  EggConfig cfg;
  cfg.alpha = alpha;
  cfg.theta_prep = preparation_angle_for(beta, alpha);
  cfg.theta_mid = kPi / 2.0;
  return cfg;
}

double effective_beta(double theta_prep, double alpha) {
  const double s = std::clamp(std::sin(theta_prep) * std::sin(2.0 * alpha), -1.0, 1.0);
  return std::asin(s) / 2.0;
}

double preparation_angle_for(double beta, double alpha) {
  require_alpha(alpha);
  if (!(beta >= 0.0 && beta <= alpha)) throw std::invalid_argument("beta must lie in [0, alpha]");
  return std::asin(std::clamp(std::sin(2.0 * beta) / std::sin(2.0 * alpha), 0.0, 1.0));
}

Unitary2 su2_from_rotation(const Eigen::Matrix3d& r) {
  // Shepperd's method for the unit quaternion (w, x, y, z), then w >= 0.
  double w, x, y, z;
  const double trace = r.trace();
  if (trace > 0.0) {
    const double s = 2.0 * std::sqrt(1.0 + trace);
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2));
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1));
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  if (w < 0.0) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  // U = w I - i (x X + y Y + z Z)
  Matrix2 u;
  u << Complex(w, -z), Complex(-y, -x), Complex(y, -x), Complex(w, z);
  return Unitary2::checked(u);
}

Unitary2 aligning_intermediate(double theta_prep, double alpha, double theta_mid) {
  require_alpha(alpha);
  Eigen::Vector3d m_prep(std::sin(theta_prep) * std::cos(2.0 * alpha), 0.0, std::cos(theta_prep));
  m_prep = m_prep.norm() < 1e-12 ? Eigen::Vector3d::UnitX() : m_prep.normalized();
  const Eigen::Vector3d c_prep = Eigen::Vector3d::UnitY();
  const Eigen::Vector3d m_mid(std::sin(theta_mid), 0.0, std::cos(theta_mid));
  const Eigen::Vector3d c_mid(-std::cos(theta_mid), 0.0, std::sin(theta_mid));
  const Eigen::Matrix3d r = frame(m_mid, c_mid) * frame(m_prep, c_prep).transpose();
  return su2_from_rotation(r);
}

AncillaTrajectory final_ancilla_states(const EggConfig& cfg) {
  cfg.validate();
  const Unitary2 ua =
      cfg.intermediate ? *cfg.intermediate
                       : aligning_intermediate(cfg.theta_prep, cfg.alpha, cfg.theta_mid);
  const Qubit a = prepared_ancilla(cfg.theta_prep);
  std::array<Qubit, 2> mid;
  for (int i = 0; i < 2; ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    mid[i] = apply(ua * rz(sign * 2.0 * cfg.alpha), a);
  }
  AncillaTrajectory t = trajectory_from(cfg.alpha, mid);
  attach_cap(t, cfg.measurement);
  return t;
}

AncillaTrajectory symmetric_final_states(double alpha, double beta) {
  require_alpha(alpha);
  std::array<Qubit, 2> mid;
  for (int i = 0; i < 2; ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    mid[i] = apply(rx(kPi / 2.0) * rz(sign * 2.0 * beta), ket_plus());
  }
  AncillaTrajectory t = trajectory_from(alpha, mid);
  attach_cap(t, Basis::hadamard());
  return t;
}

Basis midpoint_measurement(const AncillaTrajectory& t, double tol) {
  std::array<Eigen::Vector3d, 4> v;
  for (int k = 0; k < 4; ++k) v[k] = bloch_vector(t.final_states[k]);

  std::vector<Eigen::Vector3d> distinct;
  for (const auto& p : v) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const Eigen::Vector3d& q) { return (p - q).norm() < 1e-9; });
    if (!seen) distinct.push_back(p);
  }
  if (distinct.size() < 3) throw DegenerateRing("fewer than three distinct ancilla states");

  const Plane plane = plane_coefficients(distinct[0], distinct[1], distinct[2]);
  const double scale = Eigen::Vector3d(plane.a, plane.b, plane.c).norm();
  for (std::size_t k = 3; k < distinct.size(); ++k) {
    if (coplanarity_distance(distinct[0], distinct[1], distinct[2], distinct[k]) / scale > tol) {
      throw NotCoplanar("final ancilla states do not share a plane");
    }
  }

  const Eigen::Vector3d e1 = (distinct[1] - distinct[0]).normalized();
  Eigen::Vector3d e2 = distinct[2] - distinct[0];
  e2 = (e2 - e2.dot(e1) * e1).normalized();
  Eigen::Vector3d n = e1.cross(e2);
  const double offset = n.dot(distinct[0]);
  if (offset < -tol) {
    n = -n;
  } else if (std::abs(offset) <= tol) {
    for (const int axis : {2, 0, 1}) {
      if (std::abs(n(axis)) > tol) {
        if (n(axis) < 0.0) n = -n;
        break;
      }
    }
  }

  const Qubit m = bloch_to_state(from_cartesian(n));
  const Qubit m_perp = bloch_to_state(from_cartesian(-n));
  const double ref = std::abs(inner(m, t.final_states[0]));
  for (const auto& s : t.final_states) {
    if (std::abs(std::abs(inner(m, s)) - ref) > tol) {
      throw NotCoplanar("ring axis does not equalize the overlaps");
    }
  }
  return Basis::checked(m, m_perp);
}

EggOutcomePair register_unitary(const AncillaTrajectory& t, const Basis& basis, double tol) {
  EggOutcomePair out;
  for (int m = 0; m < 2; ++m) {
    std::array<Complex, 4> overlaps;
    for (int k = 0; k < 4; ++k) overlaps[k] = inner(basis[m], t.final_states[k]);
    const double mag = std::abs(overlaps[0]);
    for (const auto& o : overlaps) {
      if (std::abs(std::abs(o) - mag) > tol) {
        throw UnequalMagnitudes("measurement distinguishes register basis states");
      }
    }
    EggOutcome& e = out[m];
    e.measurement_outcome = m;
    double p = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        e.phi[i][j] = std::arg(overlaps[2 * i + j]);
        p += std::norm(overlaps[2 * i + j]);
      }
    }
    e.probability = p / 4.0;
    e.Phi = entangling_phase(e.phi);
  }
  return out;
}

double entangling_phase(const PhaseTable& phi) {
  return wrap_phase((phi[1][1] - phi[1][0]) - (phi[0][1] - phi[0][0]));
}

LocalReduction local_reduction(const PhaseTable& phi) {
  LocalReduction r;
  r.a1 = 0.0;
  r.b1 = phi[0][0];
  r.b2 = phi[0][1];
  r.a2 = phi[1][0] - phi[0][0];
  r.Phi = entangling_phase(phi);
  return r;
}

Unitary4 controlled_phase(double phi) {
  Matrix4 m = Matrix4::Identity();
  m(3, 3) = std::exp(kI * phi);
  return Unitary4::unchecked(m);
}

Unitary4 diagonal_gate(const PhaseTable& phi) {
  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(2 * i + j, 2 * i + j) = std::exp(kI * phi[i][j]);
  }
  return Unitary4::unchecked(m);
}

EggOutcomePair symmetric_outcomes_analytic(double alpha, double beta) {
  const double a = alpha + beta;
  const double b = alpha - beta;
  const double f_plus = std::arg(Complex(std::cos(a), -std::cos(b)));
  const double f_minus = std::arg(Complex(-std::sin(b), -std::sin(a)));

  EggOutcomePair out;
  EggOutcome& plus = out[0];
  plus.measurement_outcome = 0;
  plus.phi = {{{wrap_phase(f_plus), wrap_phase(-f_plus - kPi / 2.0)},
               {wrap_phase(-f_plus - kPi / 2.0), wrap_phase(f_plus)}}};
  plus.Phi = wrap_phase(4.0 * f_plus + kPi);
  plus.probability = (std::cos(a) * std::cos(a) + std::cos(b) * std::cos(b)) / 2.0;

  EggOutcome& minus = out[1];
  minus.measurement_outcome = 1;
  minus.phi = {{{wrap_phase(f_minus), wrap_phase(-f_minus - kPi / 2.0)},
                {wrap_phase(-f_minus + kPi / 2.0), wrap_phase(f_minus + kPi)}}};
  minus.Phi = wrap_phase(4.0 * f_minus + kPi);
  minus.probability = (std::sin(a) * std::sin(a) + std::sin(b) * std::sin(b)) / 2.0;
  return out;
}

ScanRow evaluate_symmetric(double alpha, double beta) {
  const EggOutcomePair o = register_unitary(symmetric_final_states(alpha, beta), Basis::hadamard());
  ScanRow row;
  row.beta = beta;
  row.phi_plus = o[0].Phi;
  row.phi_minus = o[1].Phi;
  row.delta_phi = wrap_phase(o[0].Phi - o[1].Phi);
  row.p_plus = o[0].probability;
  row.p_minus = o[1].probability;
  row.success_prob = 2.0 * row.p_plus * row.p_minus;
  return row;
}

std::vector<ScanRow> phi_scan(double alpha, double beta_lo, double beta_hi, int samples) {
  require_alpha(alpha);
  if (samples < 2) throw std::invalid_argument("scan needs at least two samples");
  if (!(beta_lo >= 0.0 && beta_lo <= beta_hi && beta_hi <= alpha)) {
    throw std::invalid_argument("beta range must lie within [0, alpha]");
  }
  std::vector<ScanRow> rows;
  rows.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double beta =
        k == samples - 1 ? beta_hi : beta_lo + (beta_hi - beta_lo) * k / (samples - 1);
    rows.push_back(evaluate_symmetric(alpha, beta));
  }
  return rows;
}

double find_balanced_beta(double alpha, double beta_lo, double beta_hi) {
  require_alpha(alpha);
  if (!(beta_lo >= 0.0 && beta_lo < beta_hi && beta_hi <= alpha)) {
    throw std::invalid_argument("beta interval must lie within [0, alpha]");
  }
  constexpr int kIntervals = 512;
  const auto delta = [&](double beta) { return evaluate_symmetric(alpha, beta).delta_phi; };

  double prev_beta = beta_lo;
  double prev = delta(prev_beta);
  for (int k = 1; k <= kIntervals; ++k) {
    const double beta =
        k == kIntervals ? beta_hi : beta_lo + (beta_hi - beta_lo) * k / kIntervals;
    const double cur = delta(beta);
    const bool crosses = std::sin(prev) * std::sin(cur) <= 0.0;
    if (crosses && std::cos(prev) < 0.0 && std::cos(cur) < 0.0) {
      double lo = prev_beta;
      double hi = beta;
      double f_lo = std::sin(prev);
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = std::sin(delta(mid));
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_beta = beta;
    prev = cur;
  }
  throw NoRoot("delta Phi does not reach pi on the beta interval");
}

double find_balanced_beta(double alpha) { return find_balanced_beta(alpha, 0.0, alpha); }

RusResult run_rus(double alpha, double beta_star, Rng& rng, int max_attempts) {
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
  const ScanRow row = evaluate_symmetric(alpha, beta_star);
  if (std::abs(std::abs(row.delta_phi) - kPi) > 1e-6) {
    throw std::invalid_argument("beta_star is not a delta Phi = pi operating point");
  }
  const std::array<double, 2> phi{row.phi_plus, row.phi_minus};

  RusResult result;
  while (result.attempts < max_attempts) {
    RusAttempt a;
    a.first_outcome = rng.bernoulli(row.p_plus) ? 0 : 1;
    // Second round runs with Pauli-X conjugation on a register qubit, which
    // negates its phase.
    a.second_outcome = rng.bernoulli(row.p_plus) ? 0 : 1;
    a.combined_phi = wrap_phase(phi[a.first_outcome] - phi[a.second_outcome]);
    a.success = a.first_outcome != a.second_outcome;
    result.log.push_back(a);
    ++result.attempts;
    if (a.success) {
      result.success = true;
      break;
    }
  }
  return result;
}

Plane plane_coefficients(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                         const Eigen::Vector3d& p3) {
  const Eigen::Vector3d n = (p2 - p1).cross(p3 - p1);
  if (n.norm() < 1e-12) throw CollinearPoints("plane needs three non-collinear points");

  Eigen::Matrix3d m;
  m.row(0) = p1;
  m.row(1) = p2;
  m.row(2) = p3;
  const double det = m.determinant();
  if (std::abs(det) < 1e-12) {
    return {-n.x(), -n.y(), -n.z(), n.dot(p1), true};
  }
  Plane plane;
  for (int col = 0; col < 3; ++col) {
    Eigen::Matrix3d r = m;
    r.col(col).setOnes();
    const double coeff = -r.determinant();  // (-d / D) |...| with d = D
    if (col == 0) plane.a = coeff;
    if (col == 1) plane.b = coeff;
    if (col == 2) plane.c = coeff;
  }
  plane.d = det;
  return plane;
}

double coplanarity_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                            const Eigen::Vector3d& p3, const Eigen::Vector3d& p4) {
  const Plane pl = plane_coefficients(p1, p2, p3);
  return std::abs(pl.a * p4.x() + pl.b * p4.y() + pl.c * p4.z() + pl.d);
}

double constrained_distance(double theta2, double theta4, double phi1, double phi2, double phi3,
                            double phi4) {
  if (std::abs(wrap_phase((phi2 - phi1) - (phi4 - phi3))) > 1e-9) {
    throw ConstraintViolated("azimuth differences of the two pairs must agree");
  }
  const double s = (phi3 + phi4) / 2.0;
  return 2.0 * (std::cos(theta2) - std::cos(theta4)) *
         (std::cos(phi2 - s) - std::cos(phi1 - s)) * std::sin(theta2) * std::sin(theta4) *
         std::sin((phi3 - phi4) / 2.0);
}

bool vertical_plane_check(double phi1, double phi3, double tol) {
  double r = std::fmod(phi1 - phi3, kPi);
  if (r < 0.0) r += kPi;
  return r < tol || kPi - r < tol;
}

}  // namespace adqc
