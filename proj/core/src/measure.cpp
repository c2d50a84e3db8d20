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

#include "adqc/measure.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "adqc/errors.hpp"

namespace adqc {
namespace {

constexpr double kPiSlack = 1e-6;

double effective_theta(double theta) { return std::min(theta, kPi); }

// |cos(theta/2)|, exactly zero at theta = pi.
double step_contraction(double theta) {
  const double t = effective_theta(theta);
  return t == kPi ? 0.0 : std::cos(t / 2.0);
}

}  // namespace

void MeasureConfig::validate() const {
  if (!(theta > 0.0 && theta <= kPi + kPiSlack)) {
    throw std::invalid_argument("theta must lie in (0, pi]");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (max_steps && *max_steps < 1) throw std::invalid_argument("max_steps must be positive");
}

int MeasureConfig::steps() const {
  validate();
  return max_steps ? *max_steps : required_steps(theta, epsilon);
}

int required_steps(double theta, double epsilon) {
  if (!(theta > 0.0 && theta <= kPi + kPiSlack)) {
    throw std::invalid_argument("theta must lie in (0, pi]");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const double c = step_contraction(theta);
  if (c == 0.0) return 1;
  const double n = std::ceil(std::log(epsilon) / std::log(c));
  return std::max(1, static_cast<int>(n));
}

Unitary4 measurement_interaction(double theta) {
  const Unitary2 h = hadamard();
  return tensor(h, h) * controlled_rz(theta, 1, 0);
}

WeakStepResult weak_step(const Qubit& reg, double theta, int outcome) {
  if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
  const double c = step_contraction(theta);
  const double s2 = 1.0 - c * c;
  const double pb = std::norm(reg[1]);
  WeakStepResult r;
  r.outcome = outcome;
  if (outcome == 1) {
    r.probability = pb * s2;
    if (r.probability < kImpossibleBranchTol) throw ImpossibleBranch("weak step outcome 1");
    r.post = ket1();
  } else {
    r.probability = std::norm(reg[0]) + pb * c * c;
    if (r.probability < kImpossibleBranchTol) throw ImpossibleBranch("weak step outcome 0");
    r.post = Qubit::normalized(Vector<2>(reg[0], reg[1] * c));
  }
  return r;
}

WeakStepResult weak_step(const Qubit& reg, double theta, Rng& rng) {
  const double c = step_contraction(theta);
  const double p1 = std::norm(reg[1]) * (1.0 - c * c);
  return weak_step(reg, theta, rng.bernoulli(p1) ? 1 : 0);
}

MeasureResult run_measurement(const Qubit& reg, const MeasureConfig& cfg, Rng& rng) {
  const int n = cfg.steps();
  const double c = step_contraction(cfg.theta);

  MeasureResult res;
  res.mislabel_bound = std::pow(c, 2.0 * n);
  Qubit state = cfg.pre_rotation ? apply(*cfg.pre_rotation, reg) : reg;
  while (res.steps_used < n) {
    const WeakStepResult step = weak_step(state, cfg.theta, rng);
    state = step.post;
    ++res.steps_used;
    res.outcome_string.push_back(step.outcome == 1 ? '1' : '0');
    if (step.outcome == 1) {
      res.label = 1;
      break;
    }
  }
  res.residual_bound = res.label == 0 ? std::pow(std::abs(c), res.steps_used) : 0.0;
  res.interaction_cost = 2 * res.steps_used;
  res.post_state = cfg.pre_rotation ? apply(cfg.pre_rotation->adjoint(), state) : state;
  return res;
}

MeasureResult initialize_register(const MeasureConfig& cfg, Rng& rng) {
  return run_measurement(ket_plus(), cfg, rng);
}

std::vector<MeasureResult> run_measurement_ensemble(const Qubit& reg, const MeasureConfig& cfg,
                                                    int trials, int threads) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  cfg.validate();
  std::vector<MeasureResult> results(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      Rng rng(hash64(cfg.seed, static_cast<std::uint64_t>(t)));
      results[t] = run_measurement(reg, cfg, rng);
    }
  };
  const int n = std::clamp(threads, 1, trials);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace adqc
