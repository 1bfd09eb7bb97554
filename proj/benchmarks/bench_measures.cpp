// Copyright 2026 The qnl Authors
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

#include "qnl/qnl.hpp"

namespace {

const qnl::DensityMatrix& sample_state() {
  static const qnl::DensityMatrix rho = qnl::mems(qnl::MemsWeights(0.8, 0.1, 0.07, 0.03));
  return rho;
}

void BM_HermitianEig4(benchmark::State& state) {
  const auto& m = sample_state().matrix();
  for (auto _ : state) benchmark::DoNotOptimize(qnl::hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig4);

void BM_Concurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qnl::concurrence(sample_state()));
}
BENCHMARK(BM_Concurrence);

void BM_Fidelity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qnl::fidelity(sample_state()));
}
BENCHMARK(BM_Fidelity);

void BM_ApplyAmplitudeDamping(benchmark::State& state) {
  const auto ch = qnl::amplitude_damping(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(qnl::apply(sample_state(), ch));
}
BENCHMARK(BM_ApplyAmplitudeDamping);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qnl::classify(sample_state()));
}
BENCHMARK(BM_Classify);

void BM_ThresholdSet(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qnl::threshold_set(sample_state(), qnl::ChannelFamily::AmplitudeDamping, 1e-6));
}
BENCHMARK(BM_ThresholdSet)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
