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

#include "umbral/catalog.hpp"

#include <array>
#include <string>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/oracles.hpp"

namespace umbral {

namespace {

constexpr std::array<std::string_view, 4> kArrayNames{"pascal_exp", "pascal_ord", "stirling2", "stirling1"};

void require_nk(const char* name, long n, long k) {
  if (!(n >= k && k >= 0)) {
    throw Error(ErrorKind::guard_violation,
                std::string(name) + " needs n >= k >= 0, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
}

std::size_t idx(long n) { return static_cast<std::size_t>(n); }

}  // namespace

RiordanArray named_array(std::string_view name) {
  const WeightSeq exp = WeightSeq::exponential();
  if (name == "pascal_exp") return RiordanArray(Umbra::unity(), Umbra::augmentation(), exp);
  if (name == "pascal_ord") {
    return RiordanArray(Umbra::boolean_unity(), Umbra::boolean_unity(), WeightSeq::ordinary());
  }
  if (name == "stirling2") return RiordanArray(Umbra::augmentation(), sdot(Rational(-1), Umbra::bernoulli()), exp);
  if (name == "stirling1") {
    return RiordanArray(Umbra::augmentation(), udot(Umbra::bernoulli(), Umbra::singleton()), exp);
  }
  throw Error(ErrorKind::unknown_name, "unknown array '" + std::string(name) + "'");
}

std::span<const std::string_view> named_array_names() { return kArrayNames; }

VerificationReport check_ex2(long n, long k, long m) {
  require_nk("ex2", n, k);
  const long d = n - k;
  Rational sum;
  for (long i = 0; i <= d; ++i) {
    sum += binomial(d, i) * oracle::cauchy1_gen(m, idx(i)) * oracle::bernoulli_gen(m - k - i, idx(d - i));
  }
  return VerificationReport::make("ex2", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"m", std::to_string(m)}},
                                  {oracle::stirling2(idx(n), idx(k))}, {binomial(n, k) * sum});
}

VerificationReport check_ex3(long n, long k) {
  require_nk("ex3", n, k);
  return VerificationReport::make("ex3", {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                                  {oracle::stirling2(idx(n), idx(k))},
                                  {binomial(n, k) * oracle::bernoulli_gen(-k, idx(n - k))});
}

VerificationReport check_ex4(long n, long k, long m) {
  require_nk("ex4", n, k);
  if (2 * k - n < m) {
    throw Error(ErrorKind::guard_violation, "ex4 needs 2k - n >= m, got n=" + std::to_string(n) +
                                                ", k=" + std::to_string(k) + ", m=" + std::to_string(m));
  }
  Rational sum;
  for (long i = 0; i <= n - k; ++i) sum += oracle::catalan_gen(m, idx(i)) * binomial(n - m - 2 * i, k - m - i);
  return VerificationReport::make("ex4", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"m", std::to_string(m)}},
                                  {binomial(n, k)}, {sum});
}

VerificationReport example_identity(std::string_view name, std::span<const long> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::invalid_argument,
                  std::string(name) + " takes " + std::to_string(count) + " parameters");
    }
  };
  if (name == "ex2" || name == "ex2_stirling_cauchy_bernoulli") {
    need(3);
    return check_ex2(params[0], params[1], params[2]);
  }
  if (name == "ex3" || name == "ex3_stirling_bernoulli") {
    need(2);
    return check_ex3(params[0], params[1]);
  }
  if (name == "ex4" || name == "ex4_catalan_binomial") {
    need(3);
    return check_ex4(params[0], params[1], params[2]);
  }
  throw Error(ErrorKind::unknown_name, "unknown example identity '" + std::string(name) + "'");
}

}  // namespace umbral
