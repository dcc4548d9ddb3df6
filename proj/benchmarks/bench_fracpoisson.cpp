// Copyright 2026 The fracpoisson Authors.
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


#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "fracpoisson/fracderiv.hpp"
#include "fracpoisson/pmf.hpp"
#include "fracpoisson/simulate.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/ztrans.hpp"

namespace {

using namespace fracpoisson;

void BM_MittagLeffler(benchmark::State& state) {
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(0.6, 1.0, z));
}
BENCHMARK(BM_MittagLeffler)->Arg(1)->Arg(5)->Arg(20);

void BM_Prabhakar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prabhakar_ml(0.7, 1.3, 2.5, -3.0));
}
BENCHMARK(BM_Prabhakar);

void pmf_column_bench(benchmark::State& state, Family family, const ModelParams& params) {
  const int k_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_table(family, params, k_max, {1.0}));
}

void BM_SfppColumn(benchmark::State& state) {
  pmf_column_bench(state, Family::sfpp, ProcessParams{1, 0.7, 1, 0, 0});
}
BENCHMARK(BM_SfppColumn)->Arg(20)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_TsfppColumn(benchmark::State& state) {
  pmf_column_bench(state, Family::tsfpp, ProcessParams{1, 0.7, 0.6, 0, 0});
}
BENCHMARK(BM_TsfppColumn)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TemperedSfppColumn(benchmark::State& state) {
  pmf_column_bench(state, Family::tempered_sfpp, ProcessParams{1, 0.6, 1, 0.5, 0});
}
BENCHMARK(BM_TemperedSfppColumn)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_TemperedTsfppColumn(benchmark::State& state) {
  pmf_column_bench(state, Family::tempered_tsfpp, ProcessParams{1, 0.7, 0.7, 0.5, 0.5});
}
BENCHMARK(BM_TemperedTsfppColumn)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GegenbauerColumn(benchmark::State& state) {
  pmf_column_bench(state, Family::gegenbauer, GegenbauerParams{1, 0.25, 0.5, 1});
}
BENCHMARK(BM_GegenbauerColumn)->Arg(20)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_ExtractPmf(benchmark::State& state) {
  const int k_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_pmf(ProcessParams{1, 0.7, 0.6, 0, 0}, k_max, 1.0));
  }
}
BENCHMARK(BM_ExtractPmf)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SampleStable(benchmark::State& state) {
  Xoshiro256 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_stable(0.7, 1.0, rng));
}
BENCHMARK(BM_SampleStable);

void BM_SampleTemperedStable(benchmark::State& state) {
  Xoshiro256 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_tempered_stable(0.6, 1.5, 3.0, rng));
}
BENCHMARK(BM_SampleTemperedStable);

void BM_SampleInverseSubordinator(benchmark::State& state) {
  Xoshiro256 rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_inverse_subordinator(0.6, 0.5, 1.0, rng));
}
BENCHMARK(BM_SampleInverseSubordinator)->Unit(benchmark::kMicrosecond);

void BM_SampleProcess(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_process(ProcessParams{1, 0.7, 0.6, 0, 0}, 1.0, n, {42, 0}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleProcess)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CaputoDerivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TimeGridFn f;
  f.h = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) f.values.push_back(std::sin(static_cast<double>(i) * f.h));
  for (auto _ : state) benchmark::DoNotOptimize(caputo_derivative(f, 0.6));
}
BENCHMARK(BM_CaputoDerivative)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
