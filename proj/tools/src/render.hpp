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

#ifndef UMBRAL_CLI_RENDER_HPP
#define UMBRAL_CLI_RENDER_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/report.hpp"
#include "umbral/riordan.hpp"

namespace umbral::cli {

enum class Format { table, csv, json };

/// Key/value context echoed into json documents.
using Meta = std::vector<std::pair<std::string, std::string>>;

void render_sequence(std::ostream& out, Format f, const Meta& meta, const std::vector<Rational>& values);
void render_triangle(std::ostream& out, Format f, const Meta& meta, const Triangle& rows);
void render_polynomials(std::ostream& out, Format f, const Meta& meta, const std::vector<Polynomial>& polys);

struct VerifySummary {
  std::string identity;
  std::size_t trials_run = 0;
  std::size_t trials_requested = 0;
  bool passed = true;
  std::optional<std::uint64_t> seed;
};

void render_reports(std::ostream& out, Format f, const VerifySummary& summary,
                    const std::vector<VerificationReport>& reports);

}  // namespace umbral::cli

#endif  // UMBRAL_CLI_RENDER_HPP
