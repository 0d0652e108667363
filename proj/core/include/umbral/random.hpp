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

#ifndef UMBRAL_RANDOM_HPP
#define UMBRAL_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "umbral/rational.hpp"
#include "umbral/riordan.hpp"
#include "umbral/umbra.hpp"
#include "umbral/weights.hpp"

namespace umbral {

/// Seeded source of random test instances.
///
/// Only raw engine output reduced modulo the range is used, so a given seed
/// yields the same instances with every standard library.
class InstanceGenerator {
 public:
  /// Moments generated per umbra unless asked otherwise. Large enough that
  /// recurrences with negative m at order 10 stay inside the data.
  static constexpr std::size_t kDefaultMoments = 32;

  explicit InstanceGenerator(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform in [lo, hi]; requires lo <= hi.
  long integer(long lo, long hi);

  /// p/q with p in [-5, 5] and q in {1, 2, 3, 4}.
  Rational rational();
  /// As rational() but never zero.
  Rational nonzero_rational();

  /// Finite umbra with moment 0 = 1 and random moments 1..count-1.
  Umbra umbra(std::size_t count = kDefaultMoments);
  /// As umbra() with moment 1 nonzero.
  Umbra invertible_umbra(std::size_t count = kDefaultMoments);

  /// Exponential or ordinary, chosen at random.
  WeightSeq weights();

  RiordanArray array(const WeightSeq& weights, std::size_t count = kDefaultMoments);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace umbral

#endif  // UMBRAL_RANDOM_HPP
