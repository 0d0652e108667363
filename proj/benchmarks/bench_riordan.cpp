// Copyright 2026 The Umbral Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "umbral/catalog.hpp"
#include "umbral/random.hpp"
#include "umbral/riordan.hpp"

namespace {

using namespace umbral;

// Fresh arrays each iteration so the row cache does not hide the work.
void BM_StirlingMatrix(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(named_array("stirling2").matrix(rows));
}
BENCHMARK(BM_StirlingMatrix)->DenseRange(4, 16, 4);

void BM_RandomMatrix(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  InstanceGenerator gen(2);
  const Umbra g = gen.umbra();
  const Umbra a = gen.umbra();
  for (auto _ : state) {
    benchmark::DoNotOptimize(RiordanArray(g, a, WeightSeq::exponential()).matrix(rows));
  }
}
BENCHMARK(BM_RandomMatrix)->DenseRange(4, 16, 4);

void BM_SymbolicProduct(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  InstanceGenerator gen(3);
  const RiordanArray a = gen.array(WeightSeq::ordinary());
  const RiordanArray b = gen.array(WeightSeq::ordinary());
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b).matrix(rows));
}
BENCHMARK(BM_SymbolicProduct)->DenseRange(4, 12, 4);

void BM_Inverse(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  InstanceGenerator gen(4);
  const RiordanArray a = gen.array(WeightSeq::exponential());
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a).matrix(rows));
}
BENCHMARK(BM_Inverse)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
