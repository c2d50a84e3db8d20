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

#include <benchmark/benchmark.h>

#include "adqc/egg.hpp"
#include "adqc/kraus.hpp"
#include "adqc/measure.hpp"
#include "adqc/sqwalk.hpp"

namespace {

void BM_KrausFor(benchmark::State& state) {
  adqc::Rng rng(1);
  const adqc::Unitary4 e = adqc::random_unitary<4>(rng);
  const adqc::Qubit a = adqc::random_state<1>(rng);
  const adqc::Basis b = adqc::Basis::hadamard();
  for (auto _ : state) benchmark::DoNotOptimize(adqc::kraus_for(e, a, b));
}
BENCHMARK(BM_KrausFor);

void BM_WalkEnsemble(benchmark::State& state) {
  const adqc::WalkConfig cfg = adqc::one_parameter_walk();
  for (auto _ : state) {
    benchmark::DoNotOptimize(adqc::run_ensemble(cfg, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WalkEnsemble)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EggScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(adqc::phi_scan(adqc::kPi / 16, 0.0, adqc::kPi / 16, 401));
  }
}
BENCHMARK(BM_EggScan)->Unit(benchmark::kMicrosecond);

void BM_BalancedBeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(adqc::find_balanced_beta(adqc::kPi / 16));
}
BENCHMARK(BM_BalancedBeta)->Unit(benchmark::kMicrosecond);

void BM_Measurement(benchmark::State& state) {
  adqc::MeasureConfig cfg;
  adqc::Rng rng(7);
  const adqc::Qubit plus = adqc::bloch_to_state({adqc::kPi / 2, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(adqc::run_measurement(plus, cfg, rng));
}
BENCHMARK(BM_Measurement);

}  // namespace

BENCHMARK_MAIN();
