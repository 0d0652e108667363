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

#ifndef UMBRAL_REPORT_HPP
#define UMBRAL_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Outcome of one identity check. Both sides are kept as sequences so that
/// checks comparing several routes (or whole matrices) fit the same shape.
struct VerificationReport {
  std::string name;
  /// Parameters in the order they were supplied.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  bool passed = false;
  std::optional<std::uint64_t> seed;

  static VerificationReport make(std::string name, std::vector<std::pair<std::string, std::string>> params,
                                 std::vector<Rational> lhs, std::vector<Rational> rhs) {
    VerificationReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.passed = r.lhs == r.rhs;
    return r;
  }
};

}  // namespace umbral

#endif  // UMBRAL_REPORT_HPP
