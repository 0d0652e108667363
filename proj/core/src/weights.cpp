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

#include "umbral/weights.hpp"

#include <utility>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"

namespace umbral {

WeightSeq::WeightSeq(Kind kind, Umbra omega, std::optional<std::vector<Rational>> values)
    : kind_(kind), omega_(std::move(omega)), values_(std::move(values)) {}

WeightSeq WeightSeq::exponential() { return WeightSeq(Kind::exponential, Umbra::unity(), std::nullopt); }

WeightSeq WeightSeq::ordinary() { return WeightSeq(Kind::ordinary, Umbra::boolean_unity(), std::nullopt); }

WeightSeq WeightSeq::from_values(std::vector<Rational> c) {
  if (c.empty() || c[0] != Rational(1)) {
    throw Error(ErrorKind::invalid_weights, "weight sequence must start with c_0 = 1");
  }
  std::vector<Rational> moments(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) {
      throw Error(ErrorKind::invalid_weights, "weight c_" + std::to_string(n) + " is zero");
    }
    moments[n] = factorial(n) / c[n];
  }
  return WeightSeq(Kind::custom, Umbra::from_moments(std::move(moments)), std::move(c));
}

WeightSeq WeightSeq::from_omega(Umbra omega) { return WeightSeq(Kind::custom, std::move(omega), std::nullopt); }

Rational WeightSeq::operator()(long n) const {
  if (n < 0) {
    throw Error(ErrorKind::guard_violation, "weight c_" + std::to_string(n) + " has a negative index");
  }
  const auto idx = static_cast<std::size_t>(n);
  switch (kind_) {
    case Kind::exponential: return factorial(idx);
    case Kind::ordinary: return Rational(1);
    case Kind::custom: break;
  }
  if (values_) {
    if (idx >= values_->size()) {
      throw Error(ErrorKind::beyond_given_order, "weight c_" + std::to_string(n) + " was not supplied");
    }
    return (*values_)[idx];
  }
  const Rational m = omega_.moment(idx);
  if (m.is_zero()) {
    throw Error(ErrorKind::invalid_weights, "omega moment " + std::to_string(n) + " is zero");
  }
  return factorial(idx) / m;
}

std::string WeightSeq::describe() const {
  switch (kind_) {
    case Kind::exponential: return "exp";
    case Kind::ordinary: return "ord";
    case Kind::custom: break;
  }
  return "custom:" + omega_.expr();
}

bool operator==(const WeightSeq& a, const WeightSeq& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != WeightSeq::Kind::custom) return true;
  return a.omega_.same_recipe(b.omega_) || a.omega_.expr() == b.omega_.expr();
}

}  // namespace umbral
