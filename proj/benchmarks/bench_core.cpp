// Copyright 2026 The dpbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dpbandit/bandit.hpp"
#include "dpbandit/environment.hpp"
#include "dpbandit/geometry.hpp"
#include "dpbandit/privacy.hpp"

namespace {

using namespace dpbandit;

void BM_FrankWolfeDesign(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const ActionSet set = generate_instance(d, k, 5).actions;
  for (auto _ : state) {
    benchmark::DoNotOptimize(frank_wolfe_design(set));
  }
}
BENCHMARK(BM_FrankWolfeDesign)
    ->Args({2, 10})
    ->Args({2, 1000})
    ->Args({5, 100})
    ->Args({5, 1000});

void BM_ZetaNet(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const ActionSet set = generate_instance(2, k, 7).actions;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_zeta_net(set, {0.05}));
  }
}
BENCHMARK(BM_ZetaNet)->Arg(100)->Arg(1000);

void BM_SampleLaplace(benchmark::State& state) {
  RngStream rng(42);
  double acc = 0.0;
  for (auto _ : state) {
    acc += sample_laplace(1.0, rng);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_SampleLaplace);

void BM_InvertAmplification(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_amplification(0.05, n, 1e-6));
  }
}
BENCHMARK(BM_InvertAmplification)->Arg(1000)->Arg(1000000);

void BM_RunCentral(benchmark::State& state) {
  const std::int64_t T = state.range(0);
  const BanditInstance inst = generate_instance(2, 10, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_central(inst, T, 1.0, 3));
  }
}
BENCHMARK(BM_RunCentral)->Arg(10000)->Arg(100000);

void BM_RunShuffled(benchmark::State& state) {
  const std::int64_t T = state.range(0);
  const BanditInstance inst = generate_instance(2, 10, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_shuffled(inst, T, 0.1, 1e-6, 3));
  }
}
BENCHMARK(BM_RunShuffled)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
