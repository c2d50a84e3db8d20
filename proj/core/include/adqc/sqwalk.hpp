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
#include <span>
#include <utility>
#include <vector>

#include "adqc/kraus.hpp"
#include "adqc/qmath.hpp"

namespace adqc {

/// Random products of {U_0, U_1} until the product is within epsilon of a
/// target in normalized trace distance.
struct WalkConfig {
  Unitary2 u0;
  Unitary2 u1;
  double p0 = 0.5;
  Unitary2 target;
  double epsilon = 0.05;
  std::int64_t max_steps = 1'000'000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on p0 outside [0, 1], epsilon outside
  /// (0, 1] or max_steps < 1.
  void validate() const;
};

struct WalkResult {
  std::int64_t steps = 0;
  bool hit = false;
  double final_distance = 1.0;
};

/// V_0 = I, V_{k+1} = U_{i(k)} V_k with i(k) = 0 w.p. p0. The distance is
/// checked at k = 0 and after every multiplication; a target satisfied by
/// the identity reports zero steps.
WalkResult run_walk(const WalkConfig& cfg, Rng& rng);

/// Trial t uses Rng(hash64(cfg.seed, t)); output is ordered by trial index
/// and identical for any thread count.
std::vector<WalkResult> run_ensemble(const WalkConfig& cfg, int trials, int threads = 1);

/// Builds the walk gates from a measured interaction: both Kraus operators
/// must be proportional to unitary; U_m = K_m / sqrt(p_m), p0 = p_0.
WalkConfig walk_config_from_kraus(const KrausPair& outcomes, const Unitary2& target,
                                  double epsilon);

/// (I (x) H) Delta(0, 0, pi/16), ancilla |+>, computational measurement:
/// U_m = H Rz(+-pi/8), p = 1/2 each. Target Rx(pi/2), epsilon 0.05.
WalkConfig one_parameter_walk();

/// Delta(pi/16, 0, pi/16), ancilla |+>, computational measurement:
/// U_m = Rz(+-pi/8) Rx(pi/8), p = 1/2 each. Target Rx(pi/2), epsilon 0.05.
WalkConfig two_parameter_walk();

std::vector<std::int64_t> step_counts(std::span<const WalkResult> results);

/// lambda = 1 / mean. Throws std::invalid_argument for empty input or
/// negative samples and std::domain_error for a zero mean.
double fit_exponential(std::span<const std::int64_t> samples);

struct Histogram {
  std::vector<double> edges;  // bin_count() + 1 strictly increasing edges
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;

  int bin_count() const { return static_cast<int>(counts.size()); }
  double center(int bin) const { return 0.5 * (edges[bin] + edges[bin + 1]); }
};

/// Equal-width bins spanning [min, max + 1). Throws std::invalid_argument
/// for bins < 1 or empty samples.
Histogram histogram(std::span<const std::int64_t> samples, int bins);

/// (bin center, ln(count)) for every non-empty bin.
std::vector<std::pair<double, double>> log_bin_counts(const Histogram& h);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares; needs at least two distinct abscissae.
LineFit fit_line(std::span<const std::pair<double, double>> points);

struct GoodnessOfFit {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 0.0;
  int cells = 0;  // cells after merging sparse tails
};

/// Pearson chi-square of a histogram against Exp(rate). The first cell is
/// extended down to 0 and the last up to infinity; neighbouring cells are
/// merged until every expected count is at least 5. One degree of freedom is
/// charged for the fitted rate.
GoodnessOfFit exponential_chi_square(const Histogram& h, double rate);

}  // namespace adqc
