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

#include "adqc/kraus.hpp"

#include <cmath>

namespace adqc {

UnitarityVerdict is_proportional_unitary(const Matrix2& k, double tol) {
  const Matrix2 kk = k * k.adjoint();
  const double p = kk.trace().real() / 2.0;
  const double defect = (kk - p * Matrix2::Identity()).norm();
  return {defect < tol, p};
}

KrausPair kraus_for(const Unitary4& e, const Qubit& ancilla, const Basis& basis) {
  KrausPair out;
  for (int m = 0; m < 2; ++m) {
    const Qubit& bra = basis[m];
    Matrix2 k = Matrix2::Zero();
    for (int r_out = 0; r_out < 2; ++r_out) {
      for (int r_in = 0; r_in < 2; ++r_in) {
        Complex acc{0.0};
        for (int a_out = 0; a_out < 2; ++a_out) {
          for (int a_in = 0; a_in < 2; ++a_in) {
            acc += std::conj(bra[a_out]) * e(2 * a_out + r_out, 2 * a_in + r_in) * ancilla[a_in];
          }
        }
        k(r_out, r_in) = acc;
      }
    }
    KrausOutcome& o = out[m];
    o.probability = (k.adjoint() * k).trace().real() / 2.0;
    if (o.probability < kImpossibleBranchTol) {
      o.impossible = true;
      o.op = Matrix2::Zero();
      o.probability = 0.0;
      o.verdict = {false, 0.0};
    } else {
      o.op = k;
      o.verdict = is_proportional_unitary(k);
    }
  }
  return out;
}

double branch_probability(const Matrix2& k, const Qubit& reg) {
  return (k * reg.amplitudes()).squaredNorm();
}

StepResult single_qubit_step(const Unitary4& e, const Qubit& ancilla, const Basis& basis,
                             const Qubit& reg, Rng& rng) {
  const KrausPair outcomes = kraus_for(e, ancilla, basis);
  const double p0 = branch_probability(outcomes[0].op, reg);
  const int m = rng.uniform() < p0 ? 0 : 1;
  const Vector<2> next = outcomes[m].op * reg.amplitudes();
  return {m, Qubit::normalized(next), outcomes[m]};
}

Unitary4 deterministic_interaction() {
  return tensor(hadamard(), hadamard()) * controlled_rz(kPi / 4.0, 0, 1);
}

DeterministicGateSet deterministic_gate_set(const Unitary4& e) {
  std::array<Unitary2, 2> gates;
  for (int b = 0; b < 2; ++b) {
    // Blocks B_a = <a|E|b> on the register; decoupling means B_a = chi_a U.
    std::array<Matrix2, 2> blocks;
    for (int a = 0; a < 2; ++a) {
      for (int r_out = 0; r_out < 2; ++r_out) {
        for (int r_in = 0; r_in < 2; ++r_in) blocks[a](r_out, r_in) = e(2 * a + r_out, 2 * b + r_in);
      }
    }
    const int ref = blocks[0].norm() >= blocks[1].norm() ? 0 : 1;
    Vector<2> chi;
    for (int a = 0; a < 2; ++a) chi(a) = (blocks[ref].adjoint() * blocks[a]).trace();
    const Qubit out_state = Qubit::normalized(chi);

    const KrausPair k = kraus_for(e, Qubit::basis(b), Basis::from_state(out_state));
    if (!k[1].impossible || !k[0].verdict.proportional ||
        std::abs(k[0].probability - 1.0) > kUnitaryTol) {
      throw std::invalid_argument("ancilla does not decouple for a computational preparation");
    }
    gates[b] = Unitary2::checked(k[0].op);
  }
  return {gates[0], gates[1]};
}

Unitary2 program_deterministic(const DeterministicGateSet& gates, std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("bit string must be non-empty");
  Unitary2 v;
  for (const char c : bits) {
    if (c == '0') {
      v = gates.u0 * v;
    } else if (c == '1') {
      v = gates.u1 * v;
    } else {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return v;
}

Unitary2 program_deterministic(std::string_view bits) {
  static const DeterministicGateSet gates = deterministic_gate_set(deterministic_interaction());
  return program_deterministic(gates, bits);
}

}  // namespace adqc
