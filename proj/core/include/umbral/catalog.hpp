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

#ifndef UMBRAL_CATALOG_HPP
#define UMBRAL_CATALOG_HPP

#include <span>
#include <string_view>
#include <vector>

#include "umbral/report.hpp"
#include "umbral/riordan.hpp"

namespace umbral {

/// pascal_exp = (u, eps), pascal_ord = (boolu, boolu) with ordinary weights,
/// stirling2 = (eps, -1.bern), stirling1 = (eps, bern.chi). Throws unknown_name.
RiordanArray named_array(std::string_view name);

/// The names accepted by named_array().
std::span<const std::string_view> named_array_names();

// The example identities below use only the classical oracles.

/// S(n,k) = C(n,k) sum_i C(n-k,i) Cauchy_i^(m) b_{n-k-i}^(m-k-i). Guard: n >= k >= 0.
VerificationReport check_ex2(long n, long k, long m);

/// S(n,k) = C(n,k) b_{n-k}^(-k). Guard: n >= k >= 0.
VerificationReport check_ex3(long n, long k);

/// C(n,k) = sum_i C_i^(m) C(n-m-2i, k-m-i). Guard: n >= k >= 0 and 2k - n >= m.
VerificationReport check_ex4(long n, long k, long m);

/// Dispatch by the long names ex2_stirling_cauchy_bernoulli,
/// ex3_stirling_bernoulli, ex4_catalan_binomial (or ex2, ex3, ex4) with
/// params (n, k[, m]).
VerificationReport example_identity(std::string_view name, std::span<const long> params);

}  // namespace umbral

#endif  // UMBRAL_CATALOG_HPP
