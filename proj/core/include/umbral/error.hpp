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

#ifndef UMBRAL_ERROR_HPP
#define UMBRAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

enum class ErrorKind {
  division_by_zero,
  insufficient_input,
  non_invertible_series,
  domain_violation,
  not_invertible,
  out_of_order_range,
  unknown_name,
  bad_constant_term,
  beyond_given_order,
  invalid_argument,
  invalid_weights,
  weight_mismatch,
  guard_violation,
  index_violation,
  syntax_error,
  evaluation_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace umbral

#endif  // UMBRAL_ERROR_HPP
