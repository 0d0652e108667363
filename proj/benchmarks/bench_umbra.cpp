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

#include "umbral/random.hpp"
#include "umbral/umbra.hpp"

namespace {

using namespace umbral;

void BM_BellMoments(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udot(Umbra::unity(), Umbra::bell()).moments(n));
}
BENCHMARK(BM_BellMoments)->RangeMultiplier(2)->Range(8, 32);

void BM_KappaMoments(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  InstanceGenerator gen(5);
  const Umbra s = gen.umbra();
  const Umbra a = gen.umbra();
  for (auto _ : state) benchmark::DoNotOptimize(kappa(s, a).moments(n));
}
BENCHMARK(BM_KappaMoments)->RangeMultiplier(2)->Range(4, 16);

void BM_AbelMoment(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  InstanceGenerator gen(6);
  const Umbra s = gen.umbra();
  const Umbra a = gen.umbra();
  for (auto _ : state) benchmark::DoNotOptimize(abel_moment(s, a, n));
}
BENCHMARK(BM_AbelMoment)->RangeMultiplier(2)->Range(4, 16);

}  // namespace

BENCHMARK_MAIN();
