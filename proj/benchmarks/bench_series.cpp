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

#include <vector>

#include "umbral/random.hpp"
#include "umbral/series.hpp"

namespace {

using umbral::Rational;
using umbral::Series;

Series random_series(std::size_t order, Rational c0, Rational c1) {
  umbral::InstanceGenerator gen(1);
  std::vector<Rational> c(order + 1);
  c[0] = c0;
  if (order >= 1) c[1] = c1;
  for (std::size_t i = 2; i <= order; ++i) c[i] = gen.rational();
  return Series(c);
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series a = random_series(n, Rational(1), Rational(2));
  const Series b = random_series(n, Rational(1), Rational(-1));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(8, 64);

void BM_Revert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series g = random_series(n, Rational(0), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(revert(g));
}
BENCHMARK(BM_Revert)->RangeMultiplier(2)->Range(4, 32);

void BM_Exp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series a = random_series(n, Rational(0), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(exp(a));
}
BENCHMARK(BM_Exp)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
