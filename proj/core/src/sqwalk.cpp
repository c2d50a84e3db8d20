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

#include "adqc/sqwalk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "adqc/interaction.hpp"

namespace adqc {

void WalkConfig::validate() const {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must lie in [0, 1]");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
}

WalkResult run_walk(const WalkConfig& cfg, Rng& rng) {
  cfg.validate();
  Matrix2 v = Matrix2::Identity();
  const auto distance = [&] { return trace_distance(Unitary2::unchecked(v), cfg.target); };
  double d = distance();
  std::int64_t steps = 0;
  while (d > cfg.epsilon && steps < cfg.max_steps) {
    const Matrix2& u = rng.uniform() < cfg.p0 ? cfg.u0.matrix() : cfg.u1.matrix();
    v = u * v;
    ++steps;
    d = distance();
  }
  return {steps, d <= cfg.epsilon, d};
}

std::vector<WalkResult> run_ensemble(const WalkConfig& cfg, int trials, int threads) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  cfg.validate();
  std::vector<WalkResult> results(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      Rng rng(hash64(cfg.seed, static_cast<std::uint64_t>(t)));
      results[t] = run_walk(cfg, rng);
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

WalkConfig walk_config_from_kraus(const KrausPair& outcomes, const Unitary2& target,
                                  double epsilon) {
  for (const auto& o : outcomes) {
    if (o.impossible || !o.verdict.proportional) {
      throw std::invalid_argument("walk gates need both Kraus operators proportional to unitary");
    }
  }
  WalkConfig cfg;
  cfg.u0 = Unitary2::checked(outcomes[0].op / std::sqrt(outcomes[0].probability));
  cfg.u1 = Unitary2::checked(outcomes[1].op / std::sqrt(outcomes[1].probability));
  cfg.p0 = outcomes[0].probability;
  cfg.target = target;
  cfg.epsilon = epsilon;
  return cfg;
}

WalkConfig one_parameter_walk() {
  InteractionSpec spec;
  spec.params = {0.0, 0.0, kPi / 16.0};
  spec.post.reg = hadamard();
  const Unitary4 e = build_interaction(spec);
  return walk_config_from_kraus(kraus_for(e, ket_plus(), Basis::computational()), rx(kPi / 2.0),
                                0.05);
}

WalkConfig two_parameter_walk() {
  const Unitary4 e = delta_gate({kPi / 16.0, 0.0, kPi / 16.0});
  return walk_config_from_kraus(kraus_for(e, ket_plus(), Basis::computational()), rx(kPi / 2.0),
                                0.05);
}

std::vector<std::int64_t> step_counts(std::span<const WalkResult> results) {
  std::vector<std::int64_t> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(r.steps);
  return out;
}

double fit_exponential(std::span<const std::int64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("fit_exponential needs samples");
  if (std::any_of(samples.begin(), samples.end(), [](std::int64_t s) { return s < 0; })) {
    throw std::invalid_argument("step counts must be non-negative");
  }
  const double sum = std::accumulate(samples.begin(), samples.end(), 0.0);
  if (sum == 0.0) throw std::domain_error("zero mean has no exponential fit");
  return static_cast<double>(samples.size()) / sum;
}

Histogram histogram(std::span<const std::int64_t> samples, int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be positive");
  if (samples.empty()) throw std::invalid_argument("histogram needs samples");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = static_cast<double>(*lo_it);
  const double hi = static_cast<double>(*hi_it) + 1.0;
  const double width = (hi - lo) / bins;

  Histogram h;
  h.edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) h.edges[k] = lo + width * k;
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (const std::int64_t s : samples) {
    int k = static_cast<int>(std::floor((static_cast<double>(s) - lo) / width));
    k = std::clamp(k, 0, bins - 1);
    ++h.counts[k];
  }
  h.total = static_cast<std::int64_t>(samples.size());
  return h;
}

std::vector<std::pair<double, double>> log_bin_counts(const Histogram& h) {
  std::vector<std::pair<double, double>> out;
  for (int k = 0; k < h.bin_count(); ++k) {
    if (h.counts[k] > 0) out.emplace_back(h.center(k), std::log(static_cast<double>(h.counts[k])));
  }
  return out;
}

LineFit fit_line(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("line fit needs two points");
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("line fit needs distinct abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

GoodnessOfFit exponential_chi_square(const Histogram& h, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");
  const int bins = h.bin_count();
  const auto cdf = [rate](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };

  std::vector<double> expected(bins);
  std::vector<double> observed(bins);
  for (int k = 0; k < bins; ++k) {
    const double lo = k == 0 ? 0.0 : cdf(h.edges[k]);
    const double hi = k == bins - 1 ? 1.0 : cdf(h.edges[k + 1]);
    expected[k] = static_cast<double>(h.total) * (hi - lo);
    observed[k] = static_cast<double>(h.counts[k]);
  }

  // Merge from the tail forwards, then fold a sparse head into its neighbour.
  std::vector<double> e_cells, o_cells;
  double e_acc = 0.0, o_acc = 0.0;
  for (int k = bins - 1; k >= 0; --k) {
    e_acc += expected[k];
    o_acc += observed[k];
    if (e_acc >= 5.0) {
      e_cells.push_back(e_acc);
      o_cells.push_back(o_acc);
      e_acc = o_acc = 0.0;
    }
  }
  if (e_acc > 0.0 || o_acc > 0.0) {
    if (e_cells.empty()) {
      e_cells.push_back(e_acc);
      o_cells.push_back(o_acc);
    } else {
      e_cells.back() += e_acc;
      o_cells.back() += o_acc;
    }
  }

  GoodnessOfFit g;
  g.cells = static_cast<int>(e_cells.size());
  for (std::size_t k = 0; k < e_cells.size(); ++k) {
    const double diff = o_cells[k] - e_cells[k];
    g.statistic += diff * diff / e_cells[k];
  }
  g.degrees_of_freedom = g.cells - 2;
  if (g.degrees_of_freedom < 1) throw std::invalid_argument("too few cells for a chi-square test");
  const boost::math::chi_squared dist(g.degrees_of_freedom);
  g.p_value = boost::math::cdf(boost::math::complement(dist, g.statistic));
  return g;
}

}  // namespace adqc
