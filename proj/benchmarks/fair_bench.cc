// Copyright 2026 The Robustfair Authors.
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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "robustfair/clustering.h"
#include "robustfair/fair_multicolor.h"
#include "robustfair/generators.h"
#include "robustfair/oracles.h"
#include "robustfair/reductions.h"
#include "robustfair/streaming.h"

namespace robustfair {
namespace {

ColorProfile Profile(int n, std::vector<std::int64_t> ratio) {
  return ColorProfile(gen::RandomColors(n, ratio, 1), ratio);
}

void BM_ClosestFairTwoColor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ColorProfile p = Profile(n, {3, 1});
  const Clustering c = gen::RandomClustering(n, 2, n / 16);
  for (auto _ : state) benchmark::DoNotOptimize(ClosestFair(c, p));
}
BENCHMARK(BM_ClosestFairTwoColor)->RangeMultiplier(8)->Range(64, 32768);

void BM_FairEqui(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ColorProfile p = Profile(n, {1, 1, 1, 1, 1, 1, 1, 1});
  const Clustering c = gen::RandomClustering(n, 3, n / 16);
  for (auto _ : state) benchmark::DoNotOptimize(FairEqui(c, p));
}
BENCHMARK(BM_FairEqui)->RangeMultiplier(8)->Range(64, 32768);

void BM_FairGeneral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ColorProfile p = Profile(n, {5, 3, 2});
  const Clustering c = gen::RandomClustering(n, 4, n / 16);
  for (auto _ : state) benchmark::DoNotOptimize(FairGeneral(c, p));
}
BENCHMARK(BM_FairGeneral)->Arg(80)->Arg(640)->Arg(5120)->Arg(40960);

void BM_Pivot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightedCCInstance inst = gen::RandomCcInstance(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(PivotCc(inst, 6));
}
BENCHMARK(BM_Pivot)->RangeMultiplier(4)->Range(64, 1024);

void BM_Stream(benchmark::State& state) {
  const int n = 40;
  const int m = static_cast<int>(state.range(0));
  const ColorProfile p = Profile(n, {1, 1});
  std::vector<Clustering> inputs;
  for (int i = 0; i < m; ++i) inputs.push_back(gen::RandomClustering(n, i, 6));
  const std::vector<StreamTriple> stream = gen::RandomStream(inputs, 7);
  const FairSolver fair = [](const Clustering& c, const ColorProfile& prof) {
    return ClosestFair(c, prof);
  };
  const FairCcSolver fair_cc = DefaultFairCcSolver(8);
  StreamParams params;
  params.g = 1.5;
  params.eps = 1;
  std::size_t peak = 0;
  for (auto _ : state) {
    const StreamResult r =
        AlgoFairConStream(stream, n, m, p, params, fair, fair_cc);
    peak = r.peak_records;
    benchmark::DoNotOptimize(r.clustering);
  }
  state.counters["peak_records"] = static_cast<double>(peak);
  state.counters["stream_records"] = static_cast<double>(stream.size());
}
BENCHMARK(BM_Stream)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_OracleClosestFair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ColorProfile p = Profile(n, {1, 1});
  const Clustering c = gen::RandomClustering(n, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::ClosestFair(c, p));
  }
}
BENCHMARK(BM_OracleClosestFair)->DenseRange(6, 10, 2)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace robustfair
