// Copyright 2026 The l2alex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encoding of links, exponents, traces and errors. The layout is
// described by docs/l2alex.schema.json. Exponents are lists of
// {"coeff": a, "form": [l_1, ..., l_c]} so that they read back bit-exact.

#include <optional>
#include <string>

#include <json.hpp>

#include "l2alex/dsl.hpp"
#include "l2alex/norm_geometry.hpp"
#include "l2alex/torsion.hpp"

namespace l2alex {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonFormatVersion = 1;

inline Json to_json(const ExponentExpr& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms()) terms.push_back({{"coeff", t.coeff}, {"form", t.form}});
  return {{"dim", e.dim()}, {"terms", std::move(terms)}, {"text", e.str()}};
}

inline ExponentExpr exponent_from_json(const Json& j) {
  try {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      Term term;
      term.coeff = t.at("coeff").get<Int>();
      term.form = t.at("form").get<IntVector>();
      require(term.form.size() == dim, ErrorKind::DimensionMismatch,
              "exponent term has a form of the wrong length");
      terms.push_back(std::move(term));
    }
    return ExponentExpr(dim, std::move(terms));
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidParameters, std::string("malformed exponent: ") + e.what());
  }
}

inline Json to_json(const TorsionClass& t) {
  Json j{{"zero", t.is_zero()}, {"dim", t.dim()}, {"text", t.str()}};
  j["exponent"] = t.is_zero() ? Json(nullptr) : to_json(t.exponent());
  return j;
}

inline Json to_json(const Substitution& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.old_dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < s.new_dim(); ++k) row.push_back(s.matrix()(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const TraceStep& s) {
  Json j;
  j["rule"] = std::string(to_string(s.rule));
  j["subject"] = s.subject;
  Json params = Json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  j["params"] = std::move(params);
  if (!s.row.empty()) j["row"] = s.row;
  if (!s.cells.empty()) j["cells"] = s.cells;
  if (!s.maps.empty()) {
    Json maps = Json::array();
    for (const auto& m : s.maps) maps.push_back(to_json(m));
    j["maps"] = std::move(maps);
  }
  j["result"] = to_json(s.result);
  j["assumptions"] = s.assumptions;
  j["warnings"] = s.warnings;
  Json children = Json::array();
  for (const auto& c : s.children) children.push_back(to_json(c));
  j["children"] = std::move(children);
  return j;
}

inline Json to_json(const LinkObject& obj) {
  Json linking = Json::array();
  for (std::size_t i = 0; i < obj.linking.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < obj.linking.size(); ++k) row.push_back(obj.linking(i, k));
    linking.push_back(std::move(row));
  }
  return {{"canonical", canonical_string(obj.spec)},
          {"components", obj.num_components},
          {"linking", std::move(linking)},
          {"split", {{"status", std::string(to_string(obj.split.status))},
                     {"reason", obj.split.reason}}}};
}

/// Output of `eval`. `trace` is omitted when the torsion came from the cache.
inline Json eval_json(const LinkObject& obj, const TorsionClass& torsion,
                      const std::optional<IntVector>& coeffs, const std::vector<std::string>& warnings,
                      const TraceStep* trace, bool cached) {
  Json j{{"version", kJsonFormatVersion}, {"command", "eval"}};
  j["link"] = to_json(obj);
  j["torsion"] = to_json(torsion);
  if (coeffs) {
    Json ev{{"coeffs", *coeffs}};
    ev["value"] = torsion.is_zero() ? Json(nullptr) : Json(torsion.exponent().evaluate(*coeffs));
    j["evaluation"] = std::move(ev);
  } else {
    j["evaluation"] = nullptr;
  }
  j["warnings"] = warnings;
  j["cached"] = cached;
  j["trace"] = trace ? to_json(*trace) : Json(nullptr);
  return j;
}

inline Json norm_json(const LinkObject& obj, const TorsionClass& torsion,
                      const std::vector<std::string>& warnings) {
  Json j{{"version", kJsonFormatVersion}, {"command", "norm"}};
  j["link"] = to_json(obj);
  j["torsion"] = to_json(torsion);
  if (torsion.is_zero()) {
    j["seminorm"] = nullptr;
  } else {
    SeminormReport r = seminorm_report(torsion.exponent());
    j["seminorm"] = {{"is_seminorm", r.is_seminorm},
                     {"degenerate_directions", r.degenerate_directions}};
  }
  j["warnings"] = warnings;
  return j;
}

inline Json ball_json(const Zonotope& z) { return {{"vertices", z.vertices}}; }

inline Json explain_json(const LinkObject& obj, const TorsionResult& r, bool verified) {
  Json j{{"version", kJsonFormatVersion}, {"command", "explain"}};
  j["link"] = to_json(obj);
  j["torsion"] = to_json(r.torsion);
  j["warnings"] = r.warnings;
  j["verified"] = verified;
  j["trace"] = to_json(r.trace);
  return j;
}

inline Json error_json(const Error& e) {
  Json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    err["line"] = s->line();
    err["column"] = s->column();
  }
  return {{"version", kJsonFormatVersion}, {"error", std::move(err)}};
}

inline Json usage_error_json(const std::string& message) {
  return {{"version", kJsonFormatVersion}, {"error", {{"kind", "UsageError"}, {"message", message}}}};
}

}  // namespace l2alex
