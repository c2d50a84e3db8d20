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

#include <gtest/gtest.h>

#include <cmath>

#include "adqc/egg.hpp"
#include "adqc/errors.hpp"
#include "convert.hpp"

using namespace adqc;
using testutil::phase_gap;

namespace {

const Complex kI{0.0, 1.0};

Eigen::Vector3d sph(double theta, double phi) { return to_cartesian({theta, phi}); }

// Basis whose first vector is the axis of the circle through the first three
// distinct Bloch points, on the side of the circle.
Basis circle_basis(const AncillaTrajectory& t) {
  std::vector<Eigen::Vector3d> pts;
  for (const auto& s : t.final_states) {
    const Eigen::Vector3d v = bloch_vector(s);
    bool seen = false;
    for (const auto& p : pts) seen = seen || (p - v).norm() < 1e-9;
    if (!seen) pts.push_back(v);
  }
  Eigen::Vector3d n = (pts[1] - pts[0]).cross(pts[2] - pts[0]).normalized();
  if (n.dot(pts[0]) < 0) n = -n;
  return Basis::from_state(bloch_to_state(from_cartesian(n)));
}

}  // namespace

TEST(EffectiveBeta, Examples) {
  const double a = kPi / 16;
  EXPECT_NEAR(effective_beta(kPi / 2, a), a, 1e-15);
  EXPECT_NEAR(effective_beta(0.0, a), 0.0, 1e-15);
  const double expected = std::asin(0.5 * std::sin(kPi / 8)) / 2;
  EXPECT_NEAR(effective_beta(kPi / 6, a), expected, 1e-15);
  EXPECT_NEAR(expected, 0.0963, 5e-5);
  EXPECT_NEAR(effective_beta(preparation_angle_for(0.1, a), a), 0.1, 1e-14);
  EXPECT_THROW(preparation_angle_for(0.3, a), std::invalid_argument);
}

TEST(Alignment, SymmetricPresetUsesRxHalfPi) {
  EXPECT_LT((aligning_intermediate(kPi / 2, kPi / 16, kPi / 2).matrix() - rx(kPi / 2).matrix()).norm(),
            1e-14);
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Unitary2 u = random_unitary<2>(rng);
    // Rotation of the Bloch sphere induced by u, fed back through the quaternion map.
    Eigen::Matrix3d r;
    for (int c = 0; c < 3; ++c) {
      const Pauli in[3] = {Pauli::X, Pauli::Y, Pauli::Z};
      const Matrix2 conj = u.matrix() * pauli(in[c]).matrix() * u.matrix().adjoint();
      for (int row = 0; row < 3; ++row) r(row, c) = 0.5 * (pauli(in[row]).matrix() * conj).trace().real();
    }
    ASSERT_LT(phase_invariant_distance(su2_from_rotation(r), u), 1e-7);
  }
}

TEST(FinalStates, ZeroSplitHasNoFirstQubitInformation) {
  EggConfig cfg;
  cfg.theta_prep = 0.0;
  cfg.measurement = Basis::computational();
  const AncillaTrajectory t = final_ancilla_states(cfg);
  for (int j = 0; j < 2; ++j) EXPECT_NEAR(fidelity(t.final_states[j], t.final_states[2 + j]), 1.0, 1e-14);
}

TEST(FinalStates, SymmetricPresetOverlaps) {
  const double a = kPi / 16;
  const double big_a = kPi / 8;
  const double big_b = 0.0;
  const AncillaTrajectory t = final_ancilla_states(EggConfig::symmetric(a, a));
  const Complex plus = inner(ket_plus(), t.final_states[0]);
  const Complex minus = inner(ket_minus(), t.final_states[0]);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(plus - r * (std::cos(big_a) - kI * std::cos(big_b))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(minus - r * (-kI * std::sin(big_a) - std::sin(big_b))), 0.0, 1e-14);
}

TEST(FinalStates, PhysicalRouteMatchesEffectiveCoupling) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = 0.02 + rng.uniform() * (kPi / 4 - 0.02);
    const double b = 0.01 + rng.uniform() * (a - 0.01);
    const AncillaTrajectory t = final_ancilla_states(EggConfig::symmetric(a, b));
    const EggOutcomePair phys = register_unitary(t, midpoint_measurement(t));
    const EggOutcomePair eff = register_unitary(symmetric_final_states(a, b), Basis::hadamard());
    for (int m = 0; m < 2; ++m) {
      ASSERT_NEAR(phys[m].probability, eff[m].probability, 1e-10);
      ASSERT_LT(phase_gap(phys[m].Phi, eff[m].Phi), 1e-9);
    }
  }
}

TEST(Midpoint, SymmetricPresetIsPlus) {
  const Basis b = midpoint_measurement(final_ancilla_states(EggConfig::symmetric(kPi / 16, kPi / 16)));
  EXPECT_NEAR(fidelity(b.first(), ket_plus()), 1.0, 1e-12);
}

TEST(Midpoint, DegenerateRing) {
  AncillaTrajectory t;
  for (auto& s : t.final_states) s = ket_plus();
  EXPECT_THROW(midpoint_measurement(t), DegenerateRing);
}

TEST(Midpoint, HorizontalCircleIsZero) {
  EggConfig cfg;
  cfg.theta_prep = kPi / 3;
  cfg.intermediate = Unitary2::identity();
  const AncillaTrajectory t = final_ancilla_states(cfg);
  EXPECT_NEAR(fidelity(midpoint_measurement(t).first(), ket0()), 1.0, 1e-12);
  ASSERT_TRUE(t.cap_half_angle.has_value());
  EXPECT_NEAR(*t.cap_half_angle, kPi / 6, 1e-12);
}

TEST(Midpoint, EquatorialCirclePicksPlusZ) {
  EggConfig cfg;
  cfg.theta_prep = kPi / 2;
  cfg.intermediate = Unitary2::identity();
  const Basis b = midpoint_measurement(final_ancilla_states(cfg));
  EXPECT_NEAR(fidelity(b.first(), ket0()), 1.0, 1e-12);
}

TEST(Midpoint, NotCoplanar) {
  AncillaTrajectory t = symmetric_final_states(kPi / 16, kPi / 16);
  t.final_states[2] = apply(rz(0.1), t.final_states[2]);
  EXPECT_THROW(midpoint_measurement(t), NotCoplanar);
}

TEST(RegisterUnitary, TableOneTransformations) {
  const EggOutcomePair o = register_unitary(symmetric_final_states(kPi / 16, kPi / 16), Basis::hadamard());
  const auto& p = o[0].phi;
  EXPECT_LT(phase_gap(p[0][1], -p[0][0] - kPi / 2), 1e-12);
  EXPECT_LT(phase_gap(p[1][0], -p[0][0] - kPi / 2), 1e-12);
  EXPECT_LT(phase_gap(p[1][1], p[0][0]), 1e-12);
  const auto& q = o[1].phi;
  EXPECT_LT(phase_gap(q[0][1], -q[0][0] - kPi / 2), 1e-12);
  EXPECT_LT(phase_gap(q[1][0], -q[0][0] + kPi / 2), 1e-12);
  EXPECT_LT(phase_gap(q[1][1], q[0][0] + kPi), 1e-12);
  EXPECT_LT(phase_gap(o[0].Phi, 4 * p[0][0] + kPi), 1e-12);
  EXPECT_LT(phase_gap(o[1].Phi, 4 * q[0][0] + kPi), 1e-12);
  EXPECT_NEAR(o[0].probability + o[1].probability, 1.0, 1e-12);
}

TEST(RegisterUnitary, ZeroPreparationGivesNoEntanglement) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    EggConfig cfg;
    cfg.alpha = 0.01 + rng.uniform() * (kPi / 4 - 0.01);
    cfg.theta_prep = 0.0;
    cfg.intermediate = random_unitary<2>(rng);
    cfg.measurement = Basis::computational();
    const EggOutcomePair o = register_unitary(final_ancilla_states(cfg), Basis::computational());
    for (const auto& e : o) ASSERT_LT(std::abs(e.Phi), 1e-10);
  }
}

TEST(RegisterUnitary, LeakyBasisThrows) {
  EXPECT_THROW(register_unitary(symmetric_final_states(kPi / 16, 0.1), Basis::computational()),
               UnequalMagnitudes);
}

TEST(EntanglingPhase, Examples) {
  EXPECT_NEAR(entangling_phase({{{0, 0}, {0, kPi}}}), kPi, 1e-15);
  EXPECT_NEAR(entangling_phase({{{0.4, 0.4}, {0.4, 0.4}}}), 0.0, 1e-15);
  EXPECT_NEAR(entangling_phase({{{0.1, 0.3}, {0.2, 0.9}}}), 0.5, 1e-15);
}

TEST(LocalReduction, Examples) {
  LocalReduction r = local_reduction({{{0, 0}, {0, kPi}}});
  EXPECT_EQ(r.a1, 0.0);
  EXPECT_NEAR(r.a2, 0.0, 1e-15);
  EXPECT_NEAR(r.b1, 0.0, 1e-15);
  EXPECT_NEAR(r.b2, 0.0, 1e-15);
  EXPECT_NEAR(r.Phi, kPi, 1e-15);
  r = local_reduction({{{0.1, 0.3}, {0.2, 0.9}}});
  EXPECT_NEAR(r.Phi, 0.5, 1e-15);
  r = local_reduction({{{0.2 + 0.5, 0.2 - 1.0}, {1.3 + 0.5, 1.3 - 1.0}}});
  EXPECT_NEAR(r.Phi, 0.0, 1e-15);
}

TEST(LocalReduction, Reconstruction) {
  Rng rng(23);
  for (int trial = 0; trial < 10000; ++trial) {
    PhaseTable phi;
    for (auto& row : phi)
      for (auto& v : row) v = 2 * kPi * rng.uniform() - kPi;
    const LocalReduction r = local_reduction(phi);
    const auto local = [&](double a1, double a2, double b1, double b2) {
      Matrix2 a = Matrix2::Zero();
      a(0, 0) = std::exp(kI * a1);
      a(1, 1) = std::exp(kI * a2);
      Matrix2 b = Matrix2::Zero();
      b(0, 0) = std::exp(kI * b1);
      b(1, 1) = std::exp(kI * b2);
      return tensor(Unitary2::unchecked(a), Unitary2::unchecked(b));
    };
    const Unitary4 target = diagonal_gate(phi);
    const Unitary4 via_cphase = local(r.a1, r.a2, r.b1, r.b2) * controlled_phase(r.Phi);
    const Unitary4 via_crz = local(r.a1, r.a2_for_crz(), r.b1, r.b2) * controlled_rz(r.Phi, 0, 1);
    ASSERT_LT((via_cphase.matrix() - target.matrix()).norm(), 1e-10);
    ASSERT_LT((via_crz.matrix() - target.matrix()).norm(), 1e-10);
  }
}

TEST(Scan, Examples) {
  const double a = kPi / 16;
  const ScanRow top = evaluate_symmetric(a, a);
  EXPECT_NEAR(top.p_plus, (std::pow(std::cos(kPi / 8), 2) + 1) / 2, 1e-14);
  EXPECT_NEAR(top.p_plus, 0.9268, 5e-5);
  EXPECT_NEAR(top.success_prob, 0.1357, 5e-5);
  const ScanRow zero = evaluate_symmetric(a, 0.0);
  EXPECT_NEAR(zero.delta_phi, 0.0, 1e-12);
  const std::vector<ScanRow> rows = phi_scan(a, 0.0, a, 101);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows.back().beta, a);
  for (const auto& row : rows) {
    ASSERT_NEAR(row.p_plus + row.p_minus, 1.0, 1e-12);
    const double big_a = a + row.beta;
    const double big_b = a - row.beta;
    ASSERT_NEAR(row.p_plus, (std::cos(big_a) * std::cos(big_a) + std::cos(big_b) * std::cos(big_b)) / 2, 1e-12);
  }
  EXPECT_THROW(phi_scan(a, 0.0, 2 * a, 10), std::invalid_argument);
  EXPECT_THROW(phi_scan(a, 0.0, a, 1), std::invalid_argument);
}

TEST(Analytic, MatchesThreeQubitStatevector) {
  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = 0.001 + rng.uniform() * (kPi / 4 - 0.001);
    const double b = rng.uniform() * a;
    const EggOutcomePair analytic = symmetric_outcomes_analytic(a, b);
    const EggOutcomePair pipeline = register_unitary(symmetric_final_states(a, b), Basis::hadamard());
    for (int m = 0; m < 2; ++m) {
      const oracle::EggBranch ref = oracle::egg_statevector(a, b, m);
      ASSERT_NEAR(analytic[m].probability, ref.probability, 1e-10);
      ASSERT_NEAR(pipeline[m].probability, ref.probability, 1e-10);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          ASSERT_LT(phase_gap(analytic[m].phi[i][j], ref.phi[i][j]), 1e-9);
          ASSERT_LT(phase_gap(pipeline[m].phi[i][j], ref.phi[i][j]), 1e-9);
        }
      ASSERT_LT(phase_gap(analytic[m].Phi, pipeline[m].Phi), 1e-9);
    }
  }
}

TEST(BalancedBeta, OperatingPoint) {
  const double a = kPi / 16;
  const double b = find_balanced_beta(a);
  EXPECT_GE(b, 0.178);
  EXPECT_LE(b, 0.188);
  EXPECT_NEAR(b, std::atan(std::sin(2 * a)) / 2, 1e-9);
  EXPECT_LT(phase_gap(std::abs(evaluate_symmetric(a, b).delta_phi), kPi), 1e-8);
}

TEST(BalancedBeta, OtherCouplings) {
  for (double a : {kPi / 4, 0.3, 0.01}) {
    const double b = find_balanced_beta(a);
    EXPECT_NEAR(b, std::atan(std::sin(2 * a)) / 2, 1e-9) << a;
    EXPECT_LT(phase_gap(std::abs(evaluate_symmetric(a, b).delta_phi), kPi), 1e-8);
  }
  EXPECT_NEAR(find_balanced_beta(kPi / 4), kPi / 8, 1e-9);
  const double b = find_balanced_beta(0.01);
  EXPECT_THROW(find_balanced_beta(0.01, 0.0, b / 2), NoRoot);
  EXPECT_THROW(find_balanced_beta(0.0), std::invalid_argument);
}

TEST(Rus, Protocol) {
  const double a = kPi / 16;
  const double b = find_balanced_beta(a);
  Rng rng(77);
  EXPECT_THROW(run_rus(a, 0.1, rng, 10), std::invalid_argument);
  const ScanRow at = evaluate_symmetric(a, b);
  std::int64_t attempts = 0;
  std::int64_t successes = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    Rng r(hash64(5, t));
    const RusResult res = run_rus(a, b, r, 1000);
    ASSERT_TRUE(res.success);
    ASSERT_EQ(res.attempts, static_cast<int>(res.log.size()));
    for (std::size_t k = 0; k < res.log.size(); ++k) {
      const RusAttempt& x = res.log[k];
      ASSERT_EQ(x.success, x.first_outcome != x.second_outcome);
      ASSERT_EQ(x.success, k + 1 == res.log.size());
      if (x.success) {
        ASSERT_LT(phase_gap(std::abs(x.combined_phi), kPi), 1e-8);
      } else {
        ASSERT_EQ(x.combined_phi, 0.0);
      }
    }
    attempts += res.attempts;
    successes += 1;
  }
  const double mean = attempts / double(trials);
  const double p = at.success_prob;
  const double sd = std::sqrt((1 - p) / (p * p) / trials);
  EXPECT_NEAR(mean, 1 / p, 4 * sd);
  EXPECT_NEAR(mean, 7.8, 0.3);
}

TEST(Plane, Examples) {
  const Plane p = plane_coefficients({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  EXPECT_FALSE(p.fallback);
  const double s = p.d;
  EXPECT_NEAR(p.a / s, -1, 1e-15);
  EXPECT_NEAR(p.b / s, -1, 1e-15);
  EXPECT_NEAR(p.c / s, -1, 1e-15);
  for (const Eigen::Vector3d& q : {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 1)}) {
    EXPECT_NEAR(p.a * q.x() + p.b * q.y() + p.c * q.z() + p.d, 0.0, 1e-15);
  }
  const Plane f = plane_coefficients({1, 0, 0}, {0, 1, 0}, {-1, 0, 0});
  EXPECT_TRUE(f.fallback);
  EXPECT_NEAR(std::abs(f.c) / Eigen::Vector3d(f.a, f.b, f.c).norm(), 1.0, 1e-15);
  EXPECT_NEAR(f.d, 0.0, 1e-15);
  EXPECT_THROW(plane_coefficients({0, 0, 0}, {1, 1, 1}, {2, 2, 2}), CollinearPoints);
}

TEST(Coplanarity, Examples) {
  EXPECT_NEAR(coplanarity_distance(sph(0.7, 0.1), sph(0.7, 1.9), sph(0.7, 3.0), sph(0.7, 5.5)), 0.0, 1e-15);
  const AncillaTrajectory t = symmetric_final_states(kPi / 16, kPi / 16);
  std::array<Eigen::Vector3d, 4> v;
  for (int k = 0; k < 4; ++k) v[k] = bloch_vector(t.final_states[k]);
  EXPECT_LT(coplanarity_distance(v[0], v[1], v[2], v[3]), 1e-10);
  BlochPoint p3 = t.bloch[2];
  p3.phi += 0.1;
  EXPECT_GT(coplanarity_distance(v[0], v[1], to_cartesian(p3), v[3]), 1e-4);
}

TEST(ConstrainedDistance, Examples) {
  const double a = 0.2;
  EXPECT_NEAR(constrained_distance(0.9, 0.9, 0.3, 0.3 + 4 * a, 1.2, 1.2 + 4 * a), 0.0, 1e-15);
  EXPECT_NEAR(constrained_distance(0.9, 2.1, 0.3, 0.3 + 4 * a, 0.3, 0.3 + 4 * a), 0.0, 1e-15);
  EXPECT_GT(std::abs(constrained_distance(0.9, 2.1, 0.3, 0.3 + 4 * a, 1.2, 1.2 + 4 * a)), 1e-3);
  EXPECT_THROW(constrained_distance(0.9, 2.1, 0.3, 0.4, 1.2, 1.5), ConstraintViolated);
}

TEST(ConstrainedDistance, MagnitudeEqualsCoplanarityDistance) {
  Rng rng(47);
  for (int trial = 0; trial < 2000; ++trial) {
    const double t2 = 0.1 + rng.uniform() * (kPi - 0.2);
    const double t4 = 0.1 + rng.uniform() * (kPi - 0.2);
    const double p1 = 2 * kPi * rng.uniform();
    const double p3 = 2 * kPi * rng.uniform();
    const double w = 0.1 + rng.uniform() * 2.8;
    const double closed = constrained_distance(t2, t4, p1, p1 + w, p3, p3 + w);
    const double direct =
        coplanarity_distance(sph(t2, p1), sph(t2, p1 + w), sph(t4, p3), sph(t4, p3 + w));
    ASSERT_NEAR(std::abs(closed), direct, 1e-9 * (1 + direct));
  }
}

TEST(VerticalPlane, Examples) {
  EXPECT_TRUE(vertical_plane_check(0.3, 0.3 + kPi, 1e-9));
  EXPECT_FALSE(vertical_plane_check(0.3, 0.4, 1e-9));
  EXPECT_TRUE(vertical_plane_check(1.7, 1.7, 1e-9));
  EXPECT_TRUE(vertical_plane_check(0.3, 0.3 - 3 * kPi, 1e-9));
}

TEST(UnitaryCondition, EquivalentToCoplanarity) {
  Rng rng(53);
  int coplanar = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    EggConfig cfg;
    cfg.alpha = 0.02 + rng.uniform() * (kPi / 4 - 0.02);
    cfg.theta_prep = 0.1 + rng.uniform() * (kPi - 0.2);
    cfg.theta_mid = rng.uniform() * kPi;
    if (trial % 2 == 1) {
      cfg.intermediate = random_unitary<2>(rng);
    } else if (trial % 4 == 2) {
      cfg.intermediate = rz(2 * kPi * rng.uniform()) * aligning_intermediate(cfg.theta_prep, cfg.alpha, cfg.theta_mid);
    }
    const AncillaTrajectory t = final_ancilla_states(cfg);
    std::array<Eigen::Vector3d, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = bloch_vector(t.final_states[k]);
    // Relative to the ring size: tiny rings sit near any plane in absolute terms.
    const double span = (v[1] - v[0]).cross(v[2] - v[0]).norm();
    const bool flat = coplanarity_distance(v[0], v[1], v[2], v[3]) / span < 1e-8;
    bool unitary = true;
    try {
      const Basis b = flat ? midpoint_measurement(t) : circle_basis(t);
      register_unitary(t, b);
    } catch (const UnequalMagnitudes&) {
      unitary = false;
    } catch (const NotCoplanar&) {
      unitary = false;
    }
    ASSERT_EQ(flat, unitary) << trial;
    ASSERT_EQ(flat, t.cap_half_angle.has_value()) << trial;
    coplanar += flat;
  }
  EXPECT_GT(coplanar, 4000);
  EXPECT_LT(coplanar, 6000);
}
