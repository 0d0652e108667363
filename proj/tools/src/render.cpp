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

#include "render.hpp"

#include <algorithm>
#include <iomanip>

#include "json.hpp"

namespace umbral::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const std::vector<Rational>& v, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].str();
  }
  return s;
}

Json strings(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json with_meta(const Meta& meta) {
  Json doc = Json::object();
  for (const auto& [k, v] : meta) doc[k] = v;
  return doc;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

void render_sequence(std::ostream& out, Format f, const Meta& meta, const std::vector<Rational>& values) {
  switch (f) {
    case Format::json: {
      Json doc = with_meta(meta);
      doc["values"] = strings(values);
      emit(out, doc);
      return;
    }
    case Format::csv:
      out << "n,value\n";
      for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n].str() << '\n';
      return;
    case Format::table: {
      std::size_t wv = 5;
      for (const auto& v : values) wv = std::max(wv, v.str().size());
      const std::size_t wn = std::max<std::size_t>(1, std::to_string(values.empty() ? 0 : values.size() - 1).size());
      out << std::setw(static_cast<int>(wn)) << "n" << "  " << std::setw(static_cast<int>(wv)) << "value" << '\n';
      for (std::size_t n = 0; n < values.size(); ++n) {
        out << std::setw(static_cast<int>(wn)) << n << "  " << std::setw(static_cast<int>(wv)) << values[n].str()
            << '\n';
      }
      return;
    }
  }
}

void render_triangle(std::ostream& out, Format f, const Meta& meta, const Triangle& rows) {
  switch (f) {
    case Format::json: {
      Json doc = with_meta(meta);
      Json r = Json::array();
      for (const auto& row : rows) r.push_back(strings(row));
      doc["rows"] = std::move(r);
      emit(out, doc);
      return;
    }
    case Format::csv:
      for (const auto& row : rows) out << join(row, ",") << '\n';
      return;
    case Format::table: {
      std::vector<std::size_t> width(rows.size(), 1);
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].str().size());
      }
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (k) out << "  ";
          out << std::setw(static_cast<int>(width[k])) << row[k].str();
        }
        out << '\n';
      }
      return;
    }
  }
}

void render_polynomials(std::ostream& out, Format f, const Meta& meta, const std::vector<Polynomial>& polys) {
  switch (f) {
    case Format::json: {
      Json doc = with_meta(meta);
      Json p = Json::array();
      for (const auto& poly : polys) p.push_back(strings(poly.coeffs()));
      doc["polynomials"] = std::move(p);
      emit(out, doc);
      return;
    }
    case Format::csv:
      for (const auto& poly : polys) out << poly.str() << '\n';
      return;
    case Format::table: {
      const std::size_t wn = std::to_string(polys.empty() ? 0 : polys.size() - 1).size();
      for (std::size_t n = 0; n < polys.size(); ++n) {
        std::string s;
        for (std::size_t i = 0; i < polys[n].coeffs().size(); ++i) {
          if (i) s += ", ";
          s += polys[n].coeffs()[i].str();
        }
        out << std::setw(static_cast<int>(wn)) << n << ": " << s << '\n';
      }
      return;
    }
  }
}

void render_reports(std::ostream& out, Format f, const VerifySummary& summary,
                    const std::vector<VerificationReport>& reports) {
  switch (f) {
    case Format::json: {
      Json doc = Json::object();
      doc["identity"] = summary.identity;
      doc["seed"] = summary.seed ? Json(*summary.seed) : Json(nullptr);
      doc["trials_requested"] = summary.trials_requested;
      doc["trials_run"] = summary.trials_run;
      doc["passed"] = summary.passed;
      Json list = Json::array();
      for (const auto& r : reports) {
        Json item = Json::object();
        item["name"] = r.name;
        Json params = Json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        item["params"] = std::move(params);
        item["lhs"] = strings(r.lhs);
        item["rhs"] = strings(r.rhs);
        item["passed"] = r.passed;
        item["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
        list.push_back(std::move(item));
      }
      doc["reports"] = std::move(list);
      emit(out, doc);
      return;
    }
    case Format::csv:
      out << "trial,name,passed,params,lhs,rhs,seed\n";
      for (std::size_t t = 0; t < reports.size(); ++t) {
        const auto& r = reports[t];
        std::string params;
        for (const auto& [k, v] : r.params) {
          if (!params.empty()) params += ';';
          params += k + "=" + v;
        }
        out << t << ',' << r.name << ',' << (r.passed ? "true" : "false") << ',' << csv_field(params) << ','
            << csv_field(join(r.lhs, ";")) << ',' << csv_field(join(r.rhs, ";")) << ','
            << (r.seed ? std::to_string(*r.seed) : "") << '\n';
      }
      return;
    case Format::table: {
      for (std::size_t t = 0; t < reports.size(); ++t) {
        const auto& r = reports[t];
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
        for (const auto& [k, v] : r.params) out << "  " << k << '=' << v;
        out << "  lhs=" << join(r.lhs, ",") << "  rhs=" << join(r.rhs, ",") << '\n';
      }
      out << summary.identity << ": ";
      if (summary.passed) {
        out << summary.trials_run << " of " << summary.trials_run << " passed";
      } else {
        out << "failed at trial " << summary.trials_run - 1 << " of " << summary.trials_requested;
      }
      if (summary.seed) out << " (seed " << *summary.seed << ')';
      out << '\n';
      return;
    }
  }
}

}  // namespace umbral::cli
