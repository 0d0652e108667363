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

#ifndef UMBRAL_EXPR_HPP
#define UMBRAL_EXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/rational.hpp"
#include "umbral/umbra.hpp"

// Text syntax for umbrae:
//
//   umbra := sum
//   sum   := dot ("+" dot)*
//   dot   := atom ("." atom)*
//   atom  := NAME | RATIONAL | "(" umbra ")" | FUNC "(" args ")"
//
//   NAME  in eps, u, chi, bell, bern, boolu
//   FUNC  in D(a), inv(a), K(a) | K(s, a), L(a) | L(s, a), had(g, a),
//            delta(k), mom(m0, m1, ...)
//   RATIONAL := ["-"] INT ["/" INT]
//
// "." binds tighter than "+" and associates to the left. "r . a" with a
// rational r is x.a; any other left operand gives the umbral dot g.a.
namespace umbral::expr {

struct Node {
  enum class Kind { name, rational, sum, dot, call };

  Kind kind = Kind::name;
  /// NAME or FUNC identifier.
  std::string id;
  Rational value;
  /// Sum terms, the two Dot operands, or call arguments.
  std::vector<Node> children;

  static Node make_name(std::string id);
  static Node make_rational(Rational value);
  static Node make_sum(std::vector<Node> terms);
  static Node make_dot(Node left, Node right);
  static Node make_call(std::string func, std::vector<Node> args);

  friend bool operator==(const Node& a, const Node& b);
};

/// A syntax error: byte offset into the source plus the tokens that would
/// have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Throws SyntaxError, or Error(unknown_name) for an identifier that is
/// neither a NAME nor a FUNC.
Node parse(std::string_view source);

/// Canonical text; parse(print(e)) == e for every parsed e.
std::string print(const Node& e);

/// Builds the umbra. Errors from the umbra layer propagate unchanged.
Umbra eval(const Node& e);

/// parse then eval.
Umbra evaluate(std::string_view source);

}  // namespace umbral::expr

#endif  // UMBRAL_EXPR_HPP
