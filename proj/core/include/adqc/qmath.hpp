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
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <span>
#include <stdexcept>

#include <Eigen/Dense>

#include "adqc/errors.hpp"
#include "adqc/rng.hpp"

/// Small dense complex linear algebra for 1-3 qubit pure-state simulation.
///
/// Qubit order: tensor factor 0 is the most significant bit of a basis index.
/// Every protocol in this library places the ancilla at factor 0.
///
/// Rotation conventions: Rz(t) = exp(-i t Z / 2), Rx(t) = exp(-i t X / 2).
/// Global phases are never canonicalized; compare with phase-invariant metrics.
namespace adqc {

using Complex = std::complex<double>;

template <int N>
using Matrix = Eigen::Matrix<Complex, N, N>;
template <int N>
using Vector = Eigen::Matrix<Complex, N, 1>;

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;
using Matrix8 = Matrix<8>;

inline constexpr double kPi = std::numbers::pi;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kCompareTol = 1e-12;
inline constexpr double kImpossibleBranchTol = 1e-14;

/// Maps an angle onto (-pi, pi].
double wrap_phase(double angle);

template <int N>
class Unitary {
  static_assert(N == 2 || N == 4 || N == 8, "1-3 qubit unitaries only");

 public:
  static constexpr int kDim = N;

  Unitary() : m_(Matrix<N>::Identity()) {}

  /// Throws NotUnitary unless entries are finite and ||U U^dag - I||_F < 1e-10.
  static Unitary checked(const Matrix<N>& m);
  /// For intermediate arithmetic whose unitarity follows from construction.
  static Unitary unchecked(const Matrix<N>& m) { return Unitary(m); }
  static Unitary identity() { return Unitary(); }

  const Matrix<N>& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Unitary adjoint() const { return Unitary(m_.adjoint()); }

  friend Unitary operator*(const Unitary& a, const Unitary& b) {
    return Unitary(a.m_ * b.m_);
  }
  friend Unitary operator*(Complex phase, const Unitary& u) {
    return Unitary(phase * u.m_);
  }

 private:
  explicit Unitary(const Matrix<N>& m) : m_(m) {}

  Matrix<N> m_;
};

using Unitary2 = Unitary<2>;
using Unitary4 = Unitary<4>;
using Unitary8 = Unitary<8>;

/// Frobenius norm of U U^dag - I.
template <int N>
double unitarity_defect(const Matrix<N>& m) {
  return (m * m.adjoint() - Matrix<N>::Identity()).norm();
}

template <int N>
Unitary<N> Unitary<N>::checked(const Matrix<N>& m) {
  if (!m.allFinite()) throw NotUnitary("matrix has non-finite entries");
  if (unitarity_defect<N>(m) >= kUnitaryTol) throw NotUnitary("matrix is not unitary");
  return Unitary(m);
}

template <int Qubits>
class PureState {
  static_assert(Qubits >= 1 && Qubits <= 3, "1-3 qubit states only");

 public:
  static constexpr int kQubits = Qubits;
  static constexpr int kDim = 1 << Qubits;
  using Amplitudes = Vector<kDim>;

  PureState() : amps_(Amplitudes::Unit(0)) {}

  /// Throws std::invalid_argument unless finite with norm 1 within 1e-10.
  static PureState checked(const Amplitudes& amps);
  /// Rescales to unit norm; throws std::invalid_argument for a zero vector.
  static PureState normalized(const Amplitudes& amps);
  static PureState unchecked(const Amplitudes& amps) { return PureState(amps); }
  static PureState basis(int index);

  const Amplitudes& amplitudes() const { return amps_; }
  Complex operator[](int index) const { return amps_(index); }

 private:
  explicit PureState(const Amplitudes& amps) : amps_(amps) {}

  Amplitudes amps_;
};

using Qubit = PureState<1>;

template <int Q>
PureState<Q> PureState<Q>::checked(const Amplitudes& amps) {
  if (!amps.allFinite()) throw std::invalid_argument("state has non-finite amplitudes");
  if (std::abs(amps.norm() - 1.0) >= kNormTol) {
    throw std::invalid_argument("state is not normalized");
  }
  return PureState(amps);
}

template <int Q>
PureState<Q> PureState<Q>::normalized(const Amplitudes& amps) {
  const double n = amps.norm();
  if (!std::isfinite(n) || n == 0.0) throw std::invalid_argument("cannot normalize zero state");
  return PureState(amps / n);
}

template <int Q>
PureState<Q> PureState<Q>::basis(int index) {
  if (index < 0 || index >= kDim) throw std::out_of_range("basis index out of range");
  return PureState(Amplitudes::Unit(index));
}

Qubit ket0();
Qubit ket1();
Qubit ket_plus();
Qubit ket_minus();

/// Inner product <a|b>.
template <int Q>
Complex inner(const PureState<Q>& a, const PureState<Q>& b) {
  return a.amplitudes().dot(b.amplitudes());
}

/// |<a|b>|^2
template <int Q>
double fidelity(const PureState<Q>& a, const PureState<Q>& b) {
  return std::norm(inner(a, b));
}

/// An orthonormal single-qubit measurement basis {|m_0>, |m_1>}.
class Basis {
 public:
  /// Throws std::invalid_argument unless orthonormal within 1e-10.
  static Basis checked(const Qubit& first, const Qubit& second);
  /// {|m>, |m_perp>} with |m_perp> = (-conj(m1), conj(m0)).
  static Basis from_state(const Qubit& m);
  static Basis computational();
  static Basis hadamard();

  const Qubit& operator[](int outcome) const;
  const Qubit& first() const { return first_; }
  const Qubit& second() const { return second_; }

 private:
  Basis(const Qubit& a, const Qubit& b) : first_(a), second_(b) {}

  Qubit first_;
  Qubit second_;
};

// Standard gates.
Unitary2 rz(double theta);
Unitary2 rx(double theta);
Unitary2 ry(double theta);
Unitary2 hadamard();
Unitary2 t_gate();

enum class Pauli { I, X, Y, Z };
Unitary2 pauli(Pauli p);

/// J(beta) = H Rz(beta).
Unitary2 j_gate(double beta);

/// diag(1, 1, 1, -1).
Unitary4 cz();
/// Controlled Rz(theta) on two qubits; control and target are 0 or 1 and
/// must differ.
Unitary4 controlled_rz(double theta, int control, int target);

template <int A, int B>
Unitary<A * B> tensor(const Unitary<A>& a, const Unitary<B>& b);

template <int A, int B>
PureState<A + B> tensor(const PureState<A>& a, const PureState<B>& b);

/// Applies `gate` to the listed qubits of `state` (qubits[0] is the gate's
/// most significant factor). No renormalization is performed. Throws
/// std::out_of_range for bad indices and std::invalid_argument when the gate
/// width does not match the index count or indices repeat.
template <int Q, int N>
PureState<Q> apply(const Unitary<N>& gate, const PureState<Q>& state,
                   std::span<const int> qubits);

template <int Q, int N>
PureState<Q> apply(const Unitary<N>& gate, const PureState<Q>& state,
                   std::initializer_list<int> qubits) {
  return apply(gate, state, std::span<const int>(qubits.begin(), qubits.size()));
}

/// Applies a gate spanning the whole register.
template <int Q>
PureState<Q> apply(const Unitary<(1 << Q)>& gate, const PureState<Q>& state) {
  return PureState<Q>::unchecked(gate.matrix() * state.amplitudes());
}

/// (<bra| on `qubit`) tensor identity, applied to `state`. Unnormalized.
template <int Q>
Vector<(1 << (Q - 1))> contract_qubit(const Qubit& bra, const PureState<Q>& state, int qubit);

/// sqrt(max(0, 1 - |Tr(A^dag B)| / N)); zero iff equal up to global phase.
template <int N>
double phase_invariant_distance(const Unitary<N>& a, const Unitary<N>& b);

/// Normalized, phase-invariant trace distance sqrt((2 - |Tr(V^dag U)|) / 2).
double trace_distance(const Unitary2& v, const Unitary2& u);

template <int Q>
struct MeasurementResult {
  int outcome = 0;
  double probability = 0.0;
  /// Full state after projection onto the observed basis vector, renormalized.
  PureState<Q> post_state;
};

/// Born probability of `outcome` when measuring `qubit` in `basis`.
template <int Q>
double branch_probability(const PureState<Q>& state, int qubit, const Basis& basis,
                          int outcome);

/// Samples a projective measurement of one qubit.
template <int Q>
MeasurementResult<Q> measure_qubit(const PureState<Q>& state, int qubit, const Basis& basis,
                                   Rng& rng);

/// Returns the requested branch. Throws ImpossibleBranch when its
/// probability is below 1e-14.
template <int Q>
MeasurementResult<Q> measure_qubit(const PureState<Q>& state, int qubit, const Basis& basis,
                                   int forced_outcome);

/// Polar angle theta in [0, pi], azimuth phi in [0, 2 pi).
struct BlochPoint {
  double theta = 0.0;
  double phi = 0.0;
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, up to global phase.
/// At the poles phi is reported as 0.
BlochPoint state_to_bloch(const Qubit& state);
Qubit bloch_to_state(const BlochPoint& point);
/// (sin t cos p, sin t sin p, cos t)
Eigen::Vector3d to_cartesian(const BlochPoint& point);
BlochPoint from_cartesian(const Eigen::Vector3d& v);
Eigen::Vector3d bloch_vector(const Qubit& state);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
template <int N>
Unitary<N> random_unitary(Rng& rng);

template <int Q>
PureState<Q> random_state(Rng& rng);

}  // namespace adqc
