#pragma once

// JSON encoding of certificates, search reports and closed-form proofs.
//
// Certificate layout:
//   {"problem": {"genus": int, "mode": "generic"|"arbitrary", "L": [a,b], "D": [a,b]},
//    "verdict": "all_vanish"|"witness"|"indeterminate",
//    "witness": {"i": int, "m": int, "dim": {"exact": v} | {"range": [lo,hi]}} | null,
//    "bound_m0": int,
//    "assumptions": [string]}
//
// Decoding is strict: unknown shapes raise std::invalid_argument.

#include <json.hpp>

#include <string>

#include "rcone/criterion.hpp"
#include "rcone/search.hpp"

namespace rcone {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument(std::string("expected object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return *it;
}

inline Int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<Int>();
}

inline std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline Json pair_to_json(SurfaceClass c) { return Json::array({c.a, c.b}); }

inline SurfaceClass pair_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument(std::string(what) + " must be a pair [a,b]");
  return {as_int(j[0], what), as_int(j[1], what)};
}

inline Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

inline std::optional<Int> optional_int_from_json(const Json& j, const char* what) {
  if (j.is_null()) return std::nullopt;
  return as_int(j, what);
}

}  // namespace detail

inline Json to_json(const DimValue& d) {
  Json j = Json::object();
  if (d.is_exact())
    j["exact"] = d.value();
  else
    j["range"] = Json::array({d.lo(), d.hi()});
  return j;
}

inline DimValue dim_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("dim must be {\"exact\": v} or {\"range\": [lo,hi]}");
  if (j.contains("exact")) return DimValue::exact(detail::as_int(j["exact"], "dim.exact"));
  const Json& r = detail::field(j, "range");
  if (!r.is_array() || r.size() != 2) throw std::invalid_argument("dim.range must be [lo,hi]");
  const Int lo = detail::as_int(r[0], "dim.range"), hi = detail::as_int(r[1], "dim.range");
  if (lo == hi) throw std::invalid_argument("dim.range must not be degenerate");
  return DimValue::range(lo, hi);
}

inline Json to_json(const ConeProblem& p) {
  Json j = Json::object();
  j["genus"] = p.model.genus();
  j["mode"] = std::string(to_string(p.model.mode()));
  j["L"] = detail::pair_to_json(p.L);
  j["D"] = detail::pair_to_json(p.D);
  return j;
}

inline ConeProblem problem_from_json(const Json& j) {
  const CurveModel model(detail::as_int(detail::field(j, "genus"), "genus"),
                         point_mode_from_string(detail::as_string(detail::field(j, "mode"), "mode")));
  return {model, detail::pair_from_json(detail::field(j, "L"), "L"),
          detail::pair_from_json(detail::field(j, "D"), "D")};
}

inline Json to_json(const Certificate& c) {
  Json j = Json::object();
  j["problem"] = to_json(c.problem);
  j["verdict"] = std::string(to_string(c.verdict));
  if (c.witness) {
    Json w = Json::object();
    w["i"] = c.witness->degree;
    w["m"] = c.witness->m;
    w["dim"] = to_json(c.witness->dim);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["bound_m0"] = c.bound_m0;
  j["assumptions"] = c.assumptions;
  return j;
}

// The indeterminate (i, m) list is not serialized; it is rebuilt by
// re-evaluating the problem over [0, bound_m0].
inline Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c{verdict_from_string(detail::as_string(detail::field(j, "verdict"), "verdict")),
                  std::nullopt,
                  detail::as_int(detail::field(j, "bound_m0"), "bound_m0"),
                  {},
                  problem_from_json(detail::field(j, "problem")),
                  {}};
    validate(c.problem);
    const Json& w = detail::field(j, "witness");
    if (!w.is_null()) {
      const Int degree = detail::as_int(detail::field(w, "i"), "witness.i");
      if (degree != 1 && degree != 2) throw std::invalid_argument("witness.i must be 1 or 2");
      c.witness = Witness{static_cast<int>(degree), detail::as_int(detail::field(w, "m"), "witness.m"),
                          dim_from_json(detail::field(w, "dim"))};
    }
    const Json& as = detail::field(j, "assumptions");
    if (!as.is_array()) throw std::invalid_argument("assumptions must be an array");
    for (const auto& s : as) c.assumptions.push_back(detail::as_string(s, "assumption"));
    if (c.verdict == Verdict::Indeterminate && c.bound_m0 >= 0 && c.bound_m0 <= serre_bound(c.problem.model, c.problem.L, c.problem.D))
      for (Int m = 0; m <= c.bound_m0; ++m)
        for (int i : {1, 2})
          if (kunneth_h(c.problem.model, twist(c.problem, m), i).is_indeterminate()) c.indeterminate.push_back({i, m});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
  }
}

inline Json to_json(const NonexistenceProof& p) {
  Json j = Json::object();
  j["genus"] = p.genus;
  j["genus_min"] = p.genus_min;
  j["L"] = detail::pair_to_json(p.L);
  Json formulas = Json::array();
  for (const auto& f : p.formulas) {
    Json terms = Json::array();
    for (const auto& t : f.terms)
      terms.push_back(Json{{"p1", Json::array({t.p1.constant, t.p1.slope})},
                           {"curve", Json::array({t.curve.constant, t.curve.slope})}});
    formulas.push_back(Json{{"name", f.name}, {"m_offset", f.m_offset}, {"terms", terms}});
  }
  j["formulas"] = formulas;
  Json cases = Json::array();
  for (const auto& c : p.cases)
    cases.push_back(Json{{"name", c.name},
                         {"d_range", Json::array({detail::optional_int(c.d_lo), detail::optional_int(c.d_hi)})},
                         {"formula", c.formula},
                         {"lower_bound", c.lower_bound},
                         {"justification", c.justification}});
  j["cases"] = cases;
  return j;
}

inline NonexistenceProof proof_from_json(const Json& j) {
  using namespace detail;
  auto affine = [](const Json& a, const char* what) {
    const SurfaceClass v = pair_from_json(a, what);
    return AffineForm{v.a, v.b};
  };
  NonexistenceProof p;
  p.genus = as_int(field(j, "genus"), "genus");
  p.genus_min = as_int(field(j, "genus_min"), "genus_min");
  p.L = pair_from_json(field(j, "L"), "L");
  p.formulas.clear();
  p.cases.clear();
  for (const auto& f : field(j, "formulas")) {
    WitnessFormula wf{as_string(field(f, "name"), "name"), as_int(field(f, "m_offset"), "m_offset"), {}};
    for (const auto& t : field(f, "terms")) wf.terms.push_back({affine(field(t, "p1"), "p1"), affine(field(t, "curve"), "curve")});
    p.formulas.push_back(std::move(wf));
  }
  for (const auto& c : field(j, "cases")) {
    const Json& r = field(c, "d_range");
    if (!r.is_array() || r.size() != 2) throw std::invalid_argument("d_range must be [lo|null, hi|null]");
    const Int idx = as_int(field(c, "formula"), "formula");
    if (idx < 0) throw std::invalid_argument("formula index must be >= 0");
    p.cases.push_back({as_string(field(c, "name"), "name"), optional_int_from_json(r[0], "d_range"),
                       optional_int_from_json(r[1], "d_range"), static_cast<std::size_t>(idx),
                       as_int(field(c, "lower_bound"), "lower_bound"),
                       as_string(field(c, "justification"), "justification")});
  }
  return p;
}

inline Json to_json(const SearchReport& r) {
  Json j = Json::object();
  j["model"] = Json{{"genus", r.model.genus()}, {"mode", std::string(to_string(r.model.mode()))}};
  j["L"] = detail::pair_to_json(r.L);
  j["grid"] = Json::array({r.grid_a, r.grid_b});
  j["closed_form_verdict"] = std::string(to_string(r.verdict));
  j["rationalizer"] = r.rationalizer ? detail::pair_to_json(*r.rationalizer) : Json(nullptr);
  j["proof"] = r.proof ? to_json(*r.proof) : Json(nullptr);
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back(Json{{"D", detail::pair_to_json(c.D)},
                         {"pattern_check", c.pattern_check},
                         {"certificate", to_json(c.certificate)}});
  j["cells"] = cells;
  return j;
}

inline SearchReport search_report_from_json(const Json& j) {
  using namespace detail;
  try {
    const Json& model = field(j, "model");
    SearchReport r;
    r.model = CurveModel(as_int(field(model, "genus"), "genus"), point_mode_from_string(as_string(field(model, "mode"), "mode")));
    r.L = pair_from_json(field(j, "L"), "L");
    const SurfaceClass grid = pair_from_json(field(j, "grid"), "grid");
    r.grid_a = grid.a;
    r.grid_b = grid.b;
    r.verdict = search_verdict_from_string(as_string(field(j, "closed_form_verdict"), "closed_form_verdict"));
    if (const Json& rat = field(j, "rationalizer"); !rat.is_null()) r.rationalizer = pair_from_json(rat, "rationalizer");
    if (const Json& pr = field(j, "proof"); !pr.is_null()) r.proof = proof_from_json(pr);
    for (const auto& c : field(j, "cells")) {
      const Json& pc = field(c, "pattern_check");
      if (!pc.is_boolean()) throw std::invalid_argument("pattern_check must be boolean");
      r.cells.push_back({pair_from_json(field(c, "D"), "D"), certificate_from_json(field(c, "certificate")), pc.get<bool>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed search report JSON: ") + e.what());
  }
}

}  // namespace rcone
