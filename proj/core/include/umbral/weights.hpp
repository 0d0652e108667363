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

#ifndef UMBRAL_WEIGHTS_HPP
#define UMBRAL_WEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

/// The weight sequence (c_n) of a generalized Riordan array, with c_0 = 1
/// and every c_n nonzero. Equivalently the umbra omega with moments n!/c_n.
class WeightSeq {
 public:
  enum class Kind { ordinary, exponential, custom };

  /// c_n = n!  (omega = unity).
  static WeightSeq exponential();
  /// c_n = 1   (omega = boolean unity).
  static WeightSeq ordinary();
  /// Explicit c_0..c_N; throws invalid_weights unless c_0 = 1 and no c_n = 0.
  static WeightSeq from_values(std::vector<Rational> c);
  /// c_n = n!/omega.moment(n); zero moments surface as invalid_weights on access.
  static WeightSeq from_omega(Umbra omega);

  Kind kind() const noexcept { return kind_; }

  /// c_n. Negative n is a guard_violation; n past explicit data is
  /// beyond_given_order.
  Rational operator()(long n) const;

  /// The umbra with moments n!/c_n.
  const Umbra& omega() const noexcept { return omega_; }

  /// "exp", "ord", or "custom:" followed by omega's expression.
  std::string describe() const;

  friend bool operator==(const WeightSeq& a, const WeightSeq& b);

 private:
  WeightSeq(Kind kind, Umbra omega, std::optional<std::vector<Rational>> values);

  Kind kind_;
  Umbra omega_;
  std::optional<std::vector<Rational>> values_;
};

}  // namespace umbral

#endif  // UMBRAL_WEIGHTS_HPP
