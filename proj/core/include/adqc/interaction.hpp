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
#include <string>
#include <string_view>
#include <vector>

#include "adqc/qmath.hpp"

namespace adqc {

/// Nonlocal core parameters of
///   Delta(ax, ay, az) = exp(-i (ax XX + ay YY + az ZZ)).
struct CanonicalParams {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;

  std::array<double, 3> as_array() const { return {ax, ay, az}; }
  static CanonicalParams from_array(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }
};

/// One symmetry move applied by normalize_params.
struct SymmetryMove {
  enum class Kind {
    HalfPiShift,     // a_k -> a_k - n pi/2
    Reflection,      // a_k -> pi/2 - a_k
    SignFlipPair,    // (a_k, a_l) -> (-a_k, -a_l)
    SingleSignFlip,  // a_k -> -a_k with no partner axis available
    Permutation,     // reorder to descending
  };

  Kind kind;
  std::vector<int> axes;  // axes involved; for Permutation, the source axis per slot
  int shift_count = 0;    // HalfPiShift only

  std::string describe() const;
};

struct NormalizedParams {
  CanonicalParams params;
  std::vector<SymmetryMove> moves;
};

/// Local unitaries on (ancilla, register) placed before or after the core.
struct LocalPair {
  Unitary2 ancilla;
  Unitary2 reg;
};

/// E = (V_A (x) V_R) Delta(params) (U_A (x) U_R).
struct InteractionSpec {
  CanonicalParams params;
  LocalPair pre;
  LocalPair post;
};

enum class ParameterCount { Local, OneParameter, TwoParameter, ThreeParameter };

struct InteractionClass {
  ParameterCount count = ParameterCount::Local;
  bool is_cz_class = false;       // ~ Delta(pi/4, 0, 0)
  bool is_cz_swap_class = false;  // ~ Delta(pi/4, pi/4, 0)
};

inline constexpr double kZeroParamTol = 1e-9;

/// Closed form: the three Pauli-pair exponentials commute, so Delta is the
/// product (cos a_k I - i sin a_k P(x)P) over k.
Unitary4 delta_gate(const CanonicalParams& p);

Unitary4 build_interaction(const InteractionSpec& spec);

/// Reduces to pi/4 >= ax >= ay >= az >= 0 using sign flips, per-axis pi/2
/// shifts, reflections about pi/4 and permutations, in that order.
NormalizedParams normalize_params(const CanonicalParams& p);

/// Counts parameters above 1e-9 after normalization.
InteractionClass classify(const CanonicalParams& p);

std::string_view to_string(ParameterCount count);

}  // namespace adqc
