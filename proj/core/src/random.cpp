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

#include "umbral/random.hpp"

#include <vector>

#include "umbral/error.hpp"

namespace umbral {

namespace {

// splitmix64 finalizer; decorrelates (seed, stream) pairs.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

InstanceGenerator::InstanceGenerator(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), engine_(mix(seed ^ mix(stream))) {}

long InstanceGenerator::integer(long lo, long hi) {
  if (lo > hi) throw Error(ErrorKind::invalid_argument, "empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational InstanceGenerator::rational() {
  const long p = integer(-5, 5);
  const long q = integer(1, 4);
  return Rational(p, q);
}

Rational InstanceGenerator::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Umbra InstanceGenerator::umbra(std::size_t count) {
  std::vector<Rational> m(count < 1 ? 1 : count);
  m[0] = Rational(1);
  for (std::size_t i = 1; i < m.size(); ++i) m[i] = rational();
  return Umbra::from_moments(std::move(m));
}

Umbra InstanceGenerator::invertible_umbra(std::size_t count) {
  std::vector<Rational> m(count < 2 ? 2 : count);
  m[0] = Rational(1);
  m[1] = nonzero_rational();
  for (std::size_t i = 2; i < m.size(); ++i) m[i] = rational();
  return Umbra::from_moments(std::move(m));
}

WeightSeq InstanceGenerator::weights() {
  return integer(0, 1) == 0 ? WeightSeq::exponential() : WeightSeq::ordinary();
}

RiordanArray InstanceGenerator::array(const WeightSeq& weights, std::size_t count) {
  Umbra g = umbra(count);
  Umbra a = umbra(count);
  return RiordanArray(std::move(g), std::move(a), weights);
}

}  // namespace umbral
