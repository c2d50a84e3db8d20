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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adqc/qmath.hpp"

namespace adqc {

/// Repeated weak z-measurement of one register qubit. Each step couples a
/// fresh |+> ancilla through (H (x) H) C-Rz(theta) with the register as
/// control, measures the ancilla in the computational basis and undoes the
/// register Hadamard.
struct MeasureConfig {
  double theta = kPi / 4.0;
  double epsilon = 0.05;
  std::uint64_t seed = 0;
  /// Replaces the computed step count when set.
  std::optional<int> max_steps;
  /// R in "measure R psi, then rotate back with R^dag". Selects the basis
  /// {R^dag |0>, R^dag |1>}.
  std::optional<Unitary2> pre_rotation;

  /// Throws std::invalid_argument for theta outside (0, pi], epsilon outside
  /// (0, 1) or a non-positive max_steps. Angles within 1e-6 above pi count
  /// as pi so six-digit inputs of pi are accepted.
  void validate() const;
  /// Step budget n: max_steps when set, otherwise required_steps.
  int steps() const;
};

/// ceil(ln epsilon / ln cos(theta / 2)), at least 1; 1 for theta = pi.
int required_steps(double theta, double epsilon);

/// The two-qubit coupling (H (x) H) C-Rz(theta) with the ancilla at factor 0
/// and the register as control.
Unitary4 measurement_interaction(double theta);

struct WeakStepResult {
  int outcome = 0;
  Qubit post;
  double probability = 0.0;
};

/// Outcome 0 leaves a|0> + b cos(theta/2)|1> (renormalized), outcome 1
/// leaves exactly |1>.
WeakStepResult weak_step(const Qubit& reg, double theta, Rng& rng);
/// Forced branch; throws ImpossibleBranch for a zero-probability outcome.
WeakStepResult weak_step(const Qubit& reg, double theta, int outcome);

struct MeasureResult {
  int label = 0;
  int steps_used = 0;
  std::string outcome_string;
  Qubit post_state;
  /// Amplitude of the wrong component left after a label-0 run,
  /// cos^steps(theta/2) relative to |b|. Zero for label 1.
  double residual_bound = 0.0;
  /// Probability that an exact |1> input is labelled 0: cos^(2n)(theta/2).
  double mislabel_bound = 0.0;
  /// Ancilla interactions including the Hadamard corrections: 2 steps_used.
  int interaction_cost = 0;
};

MeasureResult run_measurement(const Qubit& reg, const MeasureConfig& cfg, Rng& rng);

/// Starts from |+> and measures; label 0 leaves a state close to |0>,
/// label 1 leaves exactly |1>.
MeasureResult initialize_register(const MeasureConfig& cfg, Rng& rng);

/// Independent runs with per-trial generators seeded from hash64(cfg.seed, t).
std::vector<MeasureResult> run_measurement_ensemble(const Qubit& reg, const MeasureConfig& cfg,
                                                    int trials, int threads = 1);

}  // namespace adqc
