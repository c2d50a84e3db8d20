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

#include "adqc/qmath.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace adqc {
namespace {

constexpr Complex kI{0.0, 1.0};

int bit_of(int index, int qubit, int qubits) { return (index >> (qubits - 1 - qubit)) & 1; }

}  // namespace

double Rng::normal() {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Qubit ket0() { return Qubit::basis(0); }
Qubit ket1() { return Qubit::basis(1); }
Qubit ket_plus() {
  return Qubit::unchecked(Vector<2>(Complex(M_SQRT1_2), Complex(M_SQRT1_2)));
}
Qubit ket_minus() {
  return Qubit::unchecked(Vector<2>(Complex(M_SQRT1_2), Complex(-M_SQRT1_2)));
}

Basis Basis::checked(const Qubit& first, const Qubit& second) {
  const Qubit a = Qubit::checked(first.amplitudes());
  const Qubit b = Qubit::checked(second.amplitudes());
  if (std::abs(inner(a, b)) >= kNormTol) {
    throw std::invalid_argument("measurement basis is not orthogonal");
  }
  return Basis(a, b);
}

Basis Basis::from_state(const Qubit& m) {
  const Qubit a = Qubit::checked(m.amplitudes());
  const Qubit perp =
      Qubit::unchecked(Vector<2>(-std::conj(a[1]), std::conj(a[0])));
  return Basis(a, perp);
}

Basis Basis::computational() { return Basis(ket0(), ket1()); }
Basis Basis::hadamard() { return Basis(ket_plus(), ket_minus()); }

const Qubit& Basis::operator[](int outcome) const {
  if (outcome == 0) return first_;
  if (outcome == 1) return second_;
  throw std::out_of_range("measurement outcome must be 0 or 1");
}

Unitary2 rz(double theta) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::exp(-kI * (theta / 2.0));
  m(1, 1) = std::exp(kI * (theta / 2.0));
  return Unitary2::unchecked(m);
}

Unitary2 rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Matrix2 m;
  m << c, -kI * s, -kI * s, c;
  return Unitary2::unchecked(m);
}

Unitary2 ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Matrix2 m;
  m << c, -s, s, c;
  return Unitary2::unchecked(m);
}

Unitary2 hadamard() {
  Matrix2 m;
  m << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
  return Unitary2::unchecked(m);
}

Unitary2 t_gate() {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = std::exp(kI * (kPi / 4.0));
  return Unitary2::unchecked(m);
}

Unitary2 pauli(Pauli p) {
  Matrix2 m = Matrix2::Zero();
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return Unitary2::unchecked(m);
}

Unitary2 j_gate(double beta) { return hadamard() * rz(beta); }

Unitary4 cz() {
  Matrix4 m = Matrix4::Identity();
  m(3, 3) = -1.0;
  return Unitary4::unchecked(m);
}

Unitary4 controlled_rz(double theta, int control, int target) {
  if (control < 0 || control > 1 || target < 0 || target > 1) {
    throw std::out_of_range("controlled_rz qubit index out of range");
  }
  if (control == target) throw std::invalid_argument("control equals target");
  const Unitary2 r = rz(theta);
  Matrix4 m = Matrix4::Zero();
  for (int idx = 0; idx < 4; ++idx) {
    const int c = bit_of(idx, control, 2);
    const int t = bit_of(idx, target, 2);
    m(idx, idx) = c == 1 ? r(t, t) : Complex(1.0);
  }
  return Unitary4::unchecked(m);
}

template <int A, int B>
Unitary<A * B> tensor(const Unitary<A>& a, const Unitary<B>& b) {
  Matrix<A * B> m = Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return Unitary<A * B>::unchecked(m);
}

template <int A, int B>
PureState<A + B> tensor(const PureState<A>& a, const PureState<B>& b) {
  typename PureState<A + B>::Amplitudes v =
      Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes());
  return PureState<A + B>::unchecked(v);
}

template <int Q, int N>
PureState<Q> apply(const Unitary<N>& gate, const PureState<Q>& state,
                   std::span<const int> qubits) {
  constexpr int kDim = 1 << Q;
  const int width = std::countr_zero(static_cast<unsigned>(N));
  if (static_cast<int>(qubits.size()) != width) {
    throw std::invalid_argument("gate width does not match qubit count");
  }
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (qubits[k] < 0 || qubits[k] >= Q) throw std::out_of_range("qubit index out of range");
    for (std::size_t l = 0; l < k; ++l) {
      if (qubits[k] == qubits[l]) throw std::invalid_argument("repeated qubit index");
    }
  }
  int mask = 0;
  std::array<int, 3> shift{};
  for (int k = 0; k < width; ++k) {
    shift[k] = Q - 1 - qubits[k];
    mask |= 1 << shift[k];
  }
  const auto scatter = [&](int sub) {
    int idx = 0;
    for (int k = 0; k < width; ++k) idx |= ((sub >> (width - 1 - k)) & 1) << shift[k];
    return idx;
  };

  typename PureState<Q>::Amplitudes out = PureState<Q>::Amplitudes::Zero();
  const auto& in = state.amplitudes();
  for (int idx = 0; idx < kDim; ++idx) {
    if (in(idx) == Complex(0.0)) continue;
    int sub_in = 0;
    for (int k = 0; k < width; ++k) sub_in = (sub_in << 1) | ((idx >> shift[k]) & 1);
    const int rest = idx & ~mask;
    for (int sub_out = 0; sub_out < N; ++sub_out) {
      out(rest | scatter(sub_out)) += gate(sub_out, sub_in) * in(idx);
    }
  }
  return PureState<Q>::unchecked(out);
}

template <int Q>
Vector<(1 << (Q - 1))> contract_qubit(const Qubit& bra, const PureState<Q>& state, int qubit) {
  if (qubit < 0 || qubit >= Q) throw std::out_of_range("qubit index out of range");
  constexpr int kDim = 1 << Q;
  Vector<(1 << (Q - 1))> out = Vector<(1 << (Q - 1))>::Zero();
  const int shift = Q - 1 - qubit;
  const int low = (1 << shift) - 1;
  for (int idx = 0; idx < kDim; ++idx) {
    const int b = (idx >> shift) & 1;
    const int reduced = ((idx >> (shift + 1)) << shift) | (idx & low);
    out(reduced) += std::conj(bra[b]) * state[idx];
  }
  return out;
}

template <int N>
double phase_invariant_distance(const Unitary<N>& a, const Unitary<N>& b) {
  const double overlap = std::abs((a.matrix().adjoint() * b.matrix()).trace()) / N;
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double trace_distance(const Unitary2& v, const Unitary2& u) {
  const double tr = std::abs((v.matrix().adjoint() * u.matrix()).trace());
  return std::sqrt(std::max(0.0, (2.0 - tr) / 2.0));
}

namespace {

template <int Q>
typename PureState<Q>::Amplitudes project(const PureState<Q>& state, int qubit,
                                          const Qubit& m) {
  if (qubit < 0 || qubit >= Q) throw std::out_of_range("qubit index out of range");
  const Matrix2 proj = m.amplitudes() * m.amplitudes().adjoint();
  typename PureState<Q>::Amplitudes out = PureState<Q>::Amplitudes::Zero();
  const int shift = Q - 1 - qubit;
  for (int idx = 0; idx < (1 << Q); ++idx) {
    const int b = (idx >> shift) & 1;
    for (int b2 = 0; b2 < 2; ++b2) {
      const int idx2 = (idx & ~(1 << shift)) | (b2 << shift);
      out(idx2) += proj(b2, b) * state[idx];
    }
  }
  return out;
}

}  // namespace

template <int Q>
double branch_probability(const PureState<Q>& state, int qubit, const Basis& basis,
                          int outcome) {
  return project(state, qubit, basis[outcome]).squaredNorm();
}

template <int Q>
MeasurementResult<Q> measure_qubit(const PureState<Q>& state, int qubit, const Basis& basis,
                                   int forced_outcome) {
  const auto projected = project(state, qubit, basis[forced_outcome]);
  const double p = projected.squaredNorm();
  if (p < kImpossibleBranchTol) throw ImpossibleBranch("forced measurement branch has zero probability");
  return {forced_outcome, p, PureState<Q>::unchecked(projected / std::sqrt(p))};
}

template <int Q>
MeasurementResult<Q> measure_qubit(const PureState<Q>& state, int qubit, const Basis& basis,
                                   Rng& rng) {
  const double p0 = branch_probability(state, qubit, basis, 0);
  const int outcome = rng.uniform() < p0 ? 0 : 1;
  return measure_qubit(state, qubit, basis, outcome);
}

BlochPoint state_to_bloch(const Qubit& state) {
  const double r0 = std::abs(state[0]);
  const double r1 = std::abs(state[1]);
  const double theta = 2.0 * std::atan2(r1, r0);
  if (r0 < 1e-12 || r1 < 1e-12) return {theta, 0.0};
  double phi = std::arg(state[1]) - std::arg(state[0]);
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  return {theta, phi};
}

Qubit bloch_to_state(const BlochPoint& point) {
  return Qubit::unchecked(Vector<2>(Complex(std::cos(point.theta / 2.0)),
                                    std::polar(std::sin(point.theta / 2.0), point.phi)));
}

Eigen::Vector3d to_cartesian(const BlochPoint& point) {
  return {std::sin(point.theta) * std::cos(point.phi),
          std::sin(point.theta) * std::sin(point.phi), std::cos(point.theta)};
}

BlochPoint from_cartesian(const Eigen::Vector3d& v) {
  const double r = v.norm();
  if (r == 0.0) throw std::invalid_argument("zero Bloch vector");
  const double theta = std::acos(std::clamp(v.z() / r, -1.0, 1.0));
  const double rho = std::hypot(v.x(), v.y());
  if (rho < 1e-12 * r) return {theta, 0.0};
  double phi = std::atan2(v.y(), v.x());
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  return {theta, phi};
}

Eigen::Vector3d bloch_vector(const Qubit& state) {
  const Complex a = state[0];
  const Complex b = state[1];
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

template <int N>
Unitary<N> random_unitary(Rng& rng) {
  Matrix<N> g;
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) g(r, c) = Complex(rng.normal(), rng.normal());
  }
  Eigen::HouseholderQR<Matrix<N>> qr(g);
  Matrix<N> q = qr.householderQ();
  const Matrix<N> rmat = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int c = 0; c < N; ++c) {
    const Complex d = rmat(c, c);
    q.col(c) *= d / std::abs(d);
  }
  return Unitary<N>::unchecked(q);
}

template <int Q>
PureState<Q> random_state(Rng& rng) {
  typename PureState<Q>::Amplitudes v;
  for (int k = 0; k < (1 << Q); ++k) v(k) = Complex(rng.normal(), rng.normal());
  return PureState<Q>::normalized(v);
}

template Unitary<4> tensor(const Unitary<2>&, const Unitary<2>&);
template Unitary<8> tensor(const Unitary<2>&, const Unitary<4>&);
template Unitary<8> tensor(const Unitary<4>&, const Unitary<2>&);
template PureState<2> tensor(const PureState<1>&, const PureState<1>&);
template PureState<3> tensor(const PureState<1>&, const PureState<2>&);
template PureState<3> tensor(const PureState<2>&, const PureState<1>&);

template PureState<1> apply(const Unitary<2>&, const PureState<1>&, std::span<const int>);
template PureState<2> apply(const Unitary<2>&, const PureState<2>&, std::span<const int>);
template PureState<2> apply(const Unitary<4>&, const PureState<2>&, std::span<const int>);
template PureState<3> apply(const Unitary<2>&, const PureState<3>&, std::span<const int>);
template PureState<3> apply(const Unitary<4>&, const PureState<3>&, std::span<const int>);
template PureState<3> apply(const Unitary<8>&, const PureState<3>&, std::span<const int>);

template Vector<2> contract_qubit(const Qubit&, const PureState<2>&, int);
template Vector<4> contract_qubit(const Qubit&, const PureState<3>&, int);

template double phase_invariant_distance(const Unitary<2>&, const Unitary<2>&);
template double phase_invariant_distance(const Unitary<4>&, const Unitary<4>&);
template double phase_invariant_distance(const Unitary<8>&, const Unitary<8>&);

#define ADQC_INSTANTIATE_MEASURE(Q)                                                        \
  template double branch_probability(const PureState<Q>&, int, const Basis&, int);         \
  template MeasurementResult<Q> measure_qubit(const PureState<Q>&, int, const Basis&, Rng&); \
  template MeasurementResult<Q> measure_qubit(const PureState<Q>&, int, const Basis&, int);  \
  template PureState<Q> random_state<Q>(Rng&);
ADQC_INSTANTIATE_MEASURE(1)
ADQC_INSTANTIATE_MEASURE(2)
ADQC_INSTANTIATE_MEASURE(3)
#undef ADQC_INSTANTIATE_MEASURE

template Unitary<2> random_unitary<2>(Rng&);
template Unitary<4> random_unitary<4>(Rng&);
template Unitary<8> random_unitary<8>(Rng&);

}  // namespace adqc
