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
#include <string_view>

#include "adqc/qmath.hpp"

namespace adqc {

struct UnitarityVerdict {
  bool proportional = false;
  /// p = Tr(K K^dag) / 2; the branch probability when proportional.
  double scale = 0.0;
};

/// One ancilla-measurement branch acting on the register: K_m = <m|E|a>.
struct KrausOutcome {
  Matrix2 op = Matrix2::Zero();
  /// Tr(K^dag K) / 2, i.e. the branch probability for a maximally mixed
  /// register. Equals the exact, input-independent probability whenever the
  /// verdict is proportional-to-unitary.
  double probability = 0.0;
  UnitarityVerdict verdict;
  /// Branch with probability < 1e-14; `op` is zeroed but the entry is kept so
  /// outcomes stay aligned with the basis vectors.
  bool impossible = false;
};

using KrausPair = std::array<KrausOutcome, 2>;

/// True iff ||K K^dag - p I||_F < tol with p = Tr(K K^dag) / 2.
UnitarityVerdict is_proportional_unitary(const Matrix2& k, double tol = kUnitaryTol);

/// Kraus operators of ancilla preparation `ancilla`, interaction `e`
/// (ancilla = factor 0) and ancilla measurement in `basis`.
KrausPair kraus_for(const Unitary4& e, const Qubit& ancilla, const Basis& basis);

/// ||K psi||^2
double branch_probability(const Matrix2& k, const Qubit& reg);

struct StepResult {
  int outcome = 0;
  Qubit post;
  KrausOutcome applied;
};

/// One ancilla-driven step on a single register qubit: sample the Born rule
/// for the given register state and renormalize.
StepResult single_qubit_step(const Unitary4& e, const Qubit& ancilla, const Basis& basis,
                             const Qubit& reg, Rng& rng);

/// {U_0, U_1} realized without measurement by preparing the ancilla in |0>
/// or |1>. With E = U_b,R C-U_a this gives u0 = U_b and u1 = U_b U_a.
struct DeterministicGateSet {
  Unitary2 u0;
  Unitary2 u1;
};

/// (H (x) H) C-Rz(pi/4), ancilla (factor 0) as control.
Unitary4 deterministic_interaction();

/// Extracts {U_0, U_1} from an interaction whose output ancilla decouples
/// from the register for computational-basis preparations. Each U_b is the
/// probability-one branch of kraus_for with the measurement basis aligned to
/// the decoupled ancilla state. Throws std::invalid_argument when the ancilla
/// stays entangled.
DeterministicGateSet deterministic_gate_set(const Unitary4& e);

/// U_{b_k} ... U_{b_1} for bits b_1 b_2 ... b_k (first bit acts first).
/// Throws std::invalid_argument for an empty or non-binary string.
Unitary2 program_deterministic(const DeterministicGateSet& gates, std::string_view bits);

/// program_deterministic with deterministic_gate_set(deterministic_interaction()),
/// i.e. U_0 = H and U_1 = H Rz(pi/4).
Unitary2 program_deterministic(std::string_view bits);

}  // namespace adqc
