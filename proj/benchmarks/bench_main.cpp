// Copyright 2026 The qmc Authors
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

#include "qmc/classical.hpp"
#include "qmc/decomp.hpp"
#include "qmc/limits.hpp"
#include "qmc/spectral.hpp"
#include "qmc/standard_channels.hpp"

namespace {

using namespace qmc;

void BM_Spectrum(benchmark::State& state) {
  const QuantumChannel ch = classical::random_channel(state.range(0), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(ch));
}
BENCHMARK(BM_Spectrum)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_EInfinity(benchmark::State& state) {
  const QuantumChannel ch = classical::random_channel(state.range(0), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(e_infinity(ch));
}
BENCHMARK(BM_EInfinity)->Arg(2)->Arg(4)->Arg(8);

// Blocks of coherent BSCCs: I_a (x) E_B plus a dephasing tail.
void BM_TwoLevelDecomposition(benchmark::State& state) {
  const Index a = state.range(0);
  const QuantumChannel ch = direct_sum(tensor(channels::identity(a), classical::random_channel(2, 2, 3)),
                                       channels::completely_dephasing(2));
  for (auto _ : state) benchmark::DoNotOptimize(two_level_decomposition(ch));
}
BENCHMARK(BM_TwoLevelDecomposition)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_ThreeLevelEmbeddedChain(benchmark::State& state) {
  const QuantumChannel ch =
      classical::embed_stochastic(classical::random_structured_stochastic(state.range(0), 4));
  for (auto _ : state) benchmark::DoNotOptimize(three_level_decomposition(ch));
}
BENCHMARK(BM_ThreeLevelEmbeddedChain)->Arg(4)->Arg(6)->Arg(8);

void BM_LimitEquivalences(benchmark::State& state) {
  const QuantumChannel ch = classical::random_channel(state.range(0), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_limit_equivalences(ch));
}
BENCHMARK(BM_LimitEquivalences)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
