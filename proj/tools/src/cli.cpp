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

#include "umbral_cli/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "render.hpp"
#include "umbral/catalog.hpp"
#include "umbral/error.hpp"
#include "umbral/expr.hpp"
#include "umbral/identities.hpp"
#include "umbral/random.hpp"
#include "umbral/riordan.hpp"

namespace umbral::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kIdentities{
    "abel1", "abel2",      "compmom",    "lif", "mother", "nonrec",        "rec-h",       "rec-v", "rec-d",
    "lagrangek1", "lagrangek2", "ex2", "ex3", "ex4",    "group-inverse", "group-assoc", "ftra"};

const std::vector<std::string> kFormats{"table", "csv", "json"};

Format to_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return Format::table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

WeightSeq parse_weights(const std::string& spec) {
  if (spec == "exp") return WeightSeq::exponential();
  if (spec == "ord") return WeightSeq::ordinary();
  if (spec.rfind("file:", 0) != 0) throw UsageError("--weights must be exp, ord or file:PATH");
  const std::string path = spec.substr(5);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_weights, "cannot read weights file '" + path + "'");
  std::vector<Rational> c;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    try {
      c.push_back(Rational::parse(t));
    } catch (const Error&) {
      throw Error(ErrorKind::invalid_weights,
                  "weights file '" + path + "' line " + std::to_string(lineno) + ": not a rational: " + t);
    }
  }
  return WeightSeq::from_values(std::move(c));
}

struct ArrayOptions {
  std::optional<std::string> array;
  std::optional<std::string> gamma;
  std::optional<std::string> alpha;
  std::optional<std::string> weights;
};

void add_array_options(CLI::App* cmd, ArrayOptions& o) {
  cmd->add_option("--array", o.array, "Named array: pascal_exp, pascal_ord, stirling2, stirling1");
  cmd->add_option("--gamma", o.gamma, "Expression for gamma");
  cmd->add_option("--alpha", o.alpha, "Expression for alpha");
  cmd->add_option("--weights", o.weights, "exp, ord or file:PATH (default exp)");
}

struct BuiltArray {
  RiordanArray array;
  Meta meta;
};

BuiltArray build_array(const ArrayOptions& o) {
  if (o.array) {
    if (o.gamma || o.alpha) throw UsageError("--array cannot be combined with --gamma/--alpha");
    RiordanArray a = named_array(*o.array);
    return {a, {{"array", *o.array}, {"gamma", a.gamma().expr()}, {"alpha", a.alpha().expr()},
                {"weights", a.weights().describe()}}};
  }
  if (!o.gamma || !o.alpha) throw UsageError("give --array NAME or both --gamma and --alpha");
  const WeightSeq w = parse_weights(o.weights.value_or("exp"));
  RiordanArray a(expr::evaluate(*o.gamma), expr::evaluate(*o.alpha), w);
  return {a, {{"gamma", *o.gamma}, {"alpha", *o.alpha}, {"weights", w.describe()}}};
}

struct VerifyOptions {
  std::string identity;
  ArrayOptions array;
  std::optional<std::string> sigma;
  std::optional<std::string> eta;
  std::optional<std::string> lambda;
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> m;
  std::size_t trials = 1;
  std::optional<std::uint64_t> seed;
  long order = 10;
};

// Supplies each parameter of one trial: the flag value when given, a seeded
// random draw otherwise.
class Draw {
 public:
  Draw(const VerifyOptions& o, std::size_t trial) : o_(o), trial_(trial) {}

  bool used() const noexcept { return gen_.has_value(); }

  InstanceGenerator& gen() {
    if (!gen_) {
      if (!o_.seed) {
        throw UsageError(o_.identity + " needs random parameters here; pass --seed or give every parameter");
      }
      gen_.emplace(*o_.seed, trial_);
    }
    return *gen_;
  }

  Umbra umbra(const std::optional<std::string>& text) { return text ? expr::evaluate(*text) : gen().umbra(); }

  long integer(const std::optional<long>& given, long lo, long hi) {
    if (given) return *given;
    return gen().integer(lo, std::max(lo, hi));
  }

  WeightSeq weights() { return o_.array.weights ? parse_weights(*o_.array.weights) : gen().weights(); }

  RiordanArray array() {
    if (o_.array.array) return named_array(*o_.array.array);
    const WeightSeq w = weights();
    Umbra g = umbra(o_.array.gamma);
    Umbra a = umbra(o_.array.alpha);
    return RiordanArray(std::move(g), std::move(a), w);
  }

 private:
  const VerifyOptions& o_;
  std::size_t trial_;
  std::optional<InstanceGenerator> gen_;
};

long ceil_half(long x) { return x <= 0 ? -((-x) / 2) : (x + 1) / 2; }

VerificationReport run_identity(const VerifyOptions& o, Draw& d) {
  const std::string& id = o.identity;
  const long top = o.order;
  if (id == "abel1") {
    const Umbra g = d.umbra(o.array.gamma), s = d.umbra(o.sigma), a = d.umbra(o.array.alpha);
    return check_abel_I(g, s, a, static_cast<std::size_t>(d.integer(o.n, 1, top)));
  }
  if (id == "abel2") {
    const Umbra g = d.umbra(o.array.gamma), e = d.umbra(o.eta), a = d.umbra(o.array.alpha);
    return check_abel_II(g, e, a, static_cast<std::size_t>(d.integer(o.n, 0, top)));
  }
  if (id == "compmom") {
    const Umbra s = d.umbra(o.sigma), a = d.umbra(o.array.alpha);
    return check_comp_mom(s, a, static_cast<std::size_t>(d.integer(o.n, 0, top)));
  }
  if (id == "lif") {
    const Umbra s = d.umbra(o.sigma), a = d.umbra(o.array.alpha);
    return check_lif(s, a, static_cast<std::size_t>(d.integer(o.n, 1, top)));
  }
  if (id == "mother") {
    const Umbra g = d.umbra(o.array.gamma), a = d.umbra(o.array.alpha), l = d.umbra(o.lambda);
    const long n = d.integer(o.n, o.k.value_or(0), top);
    const long k = d.integer(o.k, 0, n);
    const long m = d.integer(o.m, -2, k);
    return check_mother(g, a, l, n, k, m);
  }
  if (id == "lagrangek1" || id == "lagrangek2") {
    const Umbra a = d.umbra(o.array.alpha);
    const long n = d.integer(o.n, std::max(1L, o.k.value_or(1)), top);
    const long k = d.integer(o.k, 1, n);
    return check_lagrangek(id == "lagrangek1" ? 1 : 2, a, n, k);
  }
  if (id == "ex2" || id == "ex3" || id == "ex4") {
    const long n = d.integer(o.n, o.k.value_or(0), top);
    if (id == "ex4") {
      const long k = d.integer(o.k, std::max(0L, ceil_half(n)), n);
      return check_ex4(n, k, d.integer(o.m, 0, 2 * k - n));
    }
    const long k = d.integer(o.k, 0, n);
    if (id == "ex3") return check_ex3(n, k);
    return check_ex2(n, k, d.integer(o.m, 0, 2));
  }

  const RiordanArray a = d.array();
  if (id == "group-inverse") {
    return check_group_inverse(a, static_cast<std::size_t>(d.integer(o.n, 0, std::min(top, 8L))));
  }
  if (id == "group-assoc") {
    const RiordanArray b = d.gen().array(a.weights());
    const RiordanArray c = d.gen().array(a.weights());
    return check_group_assoc(a, b, c, static_cast<std::size_t>(d.integer(o.n, 0, std::min(top, 8L))));
  }
  if (id == "ftra") {
    const Umbra eta = d.umbra(o.eta);
    return check_ftra(a, eta, static_cast<std::size_t>(o.n.value_or(top)));
  }
  const long n = d.integer(o.n, o.k.value_or(0), top);
  if (id == "rec-d") {
    const long k = d.integer(o.k, std::max(0L, ceil_half(n - 2)), n);
    const long hi = 2 * k - n;
    return rec_diff(a, n, k, d.integer(o.m, std::min(-2L, hi), hi));
  }
  const long k = d.integer(o.k, 0, n);
  const long m = d.integer(o.m, -2, k);
  if (id == "rec-h") return rec_horizontal(a, n, k, m);
  if (id == "rec-v") return rec_vertical(a, n, k, m);
  if (id == "nonrec") {
    Umbra l = Umbra::augmentation();
    if (o.lambda) {
      l = expr::evaluate(*o.lambda);
    } else {
      switch (d.integer(std::nullopt, 0, 3)) {
        case 0: break;
        case 1: l = a.alpha(); break;
        case 2: l = sdot(Rational(-1), a.alpha()); break;
        default: l = d.gen().umbra(); break;
      }
    }
    return check_nonrec(a, n, k, m, l);
  }
  throw UsageError("unknown identity '" + id + "'");
}

int cmd_verify(const VerifyOptions& o, Format format, std::ostream& out) {
  VerifySummary summary;
  summary.identity = o.identity;
  summary.trials_requested = o.trials;
  std::vector<VerificationReport> reports;
  for (std::size_t t = 0; t < o.trials; ++t) {
    Draw d(o, t);
    VerificationReport r = run_identity(o, d);
    if (d.used()) {
      r.seed = o.seed;
      summary.seed = o.seed;
    }
    reports.push_back(std::move(r));
    summary.trials_run = t + 1;
    if (!reports.back().passed) {
      summary.passed = false;
      break;
    }
    if (!d.used()) {
      summary.trials_requested = 1;
      break;
    }
  }
  if (!summary.passed && format == Format::table) {
    // Only the failing report is interesting once the run has stopped.
    std::vector<VerificationReport> last{reports.back()};
    render_reports(out, format, summary, last);
  } else {
    render_reports(out, format, summary, reports);
  }
  return summary.passed ? kExitOk : kExitIdentityFailed;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact umbral calculus and generalized Riordan arrays", "umbral"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table, csv or json")->check(CLI::IsMember(kFormats));
  };

  std::string moments_expr;
  long moments_n = 10;
  CLI::App* moments = app.add_subcommand("moments", "Print moments 0..n of an umbra expression");
  moments->add_option("expr", moments_expr, "Umbra expression, e.g. \"-1 . bern\"")->required();
  moments->add_option("--n", moments_n, "Highest moment")->check(CLI::NonNegativeNumber);
  add_format(moments);

  ArrayOptions array_opts;
  long rows = 5;
  CLI::App* array = app.add_subcommand("array", "Print rows 0..rows of a Riordan array");
  add_array_options(array, array_opts);
  array->add_option("--rows", rows, "Last row")->check(CLI::NonNegativeNumber);
  add_format(array);

  ArrayOptions sheffer_opts;
  long sheffer_n = 5;
  CLI::App* sheffer_cmd = app.add_subcommand("sheffer", "Print Sheffer polynomials 0..n as coefficient lists");
  add_array_options(sheffer_cmd, sheffer_opts);
  sheffer_cmd->add_option("--n", sheffer_n, "Last polynomial")->check(CLI::NonNegativeNumber);
  add_format(sheffer_cmd);

  VerifyOptions vo;
  std::uint64_t seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "Check an identity on explicit or seeded random parameters");
  verify->add_option("identity", vo.identity, "Identity name")->required()->check(CLI::IsMember(kIdentities));
  add_array_options(verify, vo.array);
  verify->add_option("--sigma", vo.sigma, "Expression for sigma");
  verify->add_option("--eta", vo.eta, "Expression for eta");
  verify->add_option("--lambda", vo.lambda, "Expression for lambda");
  verify->add_option("--n", vo.n, "n (rows for group checks)");
  verify->add_option("--k", vo.k, "k");
  verify->add_option("--m", vo.m, "m");
  verify->add_option("--trials", vo.trials, "Number of random trials")->check(CLI::Range(1, 100000));
  CLI::Option* seed_opt = verify->add_option("--seed", seed, "Seed for random parameters");
  verify->add_option("--order", vo.order, "Largest random n")->check(CLI::Range(0, 24));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format f = to_format(format);
  if (moments->parsed()) {
    const Umbra u = expr::evaluate(moments_expr);
    render_sequence(out, f, {{"expr", moments_expr}, {"n", std::to_string(moments_n)}},
                    u.moments(static_cast<std::size_t>(moments_n)));
    return kExitOk;
  }
  if (array->parsed()) {
    BuiltArray b = build_array(array_opts);
    b.meta.emplace_back("rows", std::to_string(rows));
    render_triangle(out, f, b.meta, b.array.matrix(static_cast<std::size_t>(rows)));
    return kExitOk;
  }
  if (sheffer_cmd->parsed()) {
    BuiltArray b = build_array(sheffer_opts);
    b.meta.emplace_back("n", std::to_string(sheffer_n));
    std::vector<Polynomial> polys;
    for (long i = 0; i <= sheffer_n; ++i) polys.push_back(sheffer(b.array, static_cast<std::size_t>(i)));
    render_polynomials(out, f, b.meta, polys);
    return kExitOk;
  }
  if (*seed_opt) vo.seed = seed;
  return cmd_verify(vo, f, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"umbral"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  } catch (const UsageError& e) {
    err << "umbral: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "umbral: " << to_string(e.kind()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "umbral: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace umbral::cli
