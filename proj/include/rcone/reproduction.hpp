#pragma once

// Fixed end-to-end run on C x P1 with g = 2, L = C0 + f: the cone point is
// non-rational, the top-cohomology necessary condition holds, and yet no
// effective class a C0 + b f rationalizes the cone.

#include <string>
#include <vector>

#include "rcone/criterion.hpp"
#include "rcone/search.hpp"

namespace rcone {

struct ReproductionCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct Reproduction {
  CurveModel model{2, PointMode::Generic};
  SurfaceClass L{1, 1};
  Int grid = 50;
  Certificate cone_point;
  DimValue h1_of_L = DimValue::zero();
  DimValue h2_of_structure_sheaf = DimValue::zero();
  TopCohomologyResult top;
  SearchReport search;
  SearchSummary summary;
  std::vector<ReproductionCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  // "nonexistence proved; N/N grid certificates valid; pattern match P%"
  std::string headline() const {
    std::string s = (search.verdict == SearchVerdict::NonexistenceProved && summary.proof_valid)
                        ? "nonexistence proved"
                        : "nonexistence NOT proved";
    s += "; " + std::to_string(summary.valid_certificates) + "/" + std::to_string(summary.cells) +
         " grid certificates valid; pattern match ";
    const std::size_t pct = summary.cells == 0 ? 0 : (100 * summary.pattern_matches) / summary.cells;
    s += std::to_string(pct) + "%";
    return s;
  }
};

inline Reproduction reproduce(Int genus = 2, Int grid = 50) {
  Reproduction r;
  r.model = CurveModel(genus, PointMode::Generic);
  r.grid = grid;
  r.cone_point = cone_check({r.model, r.L, {0, 0}});
  r.h1_of_L = kunneth_h(r.model, r.L, 1);
  r.h2_of_structure_sheaf = kunneth_h(r.model, {0, 0}, 2);
  r.top = top_cohomology_check(r.model, r.L);
  r.search = search_grid(r.model, r.L, grid, grid);
  r.summary = summarize(r.search);

  const Int g = genus;
  r.checks.push_back({"cone point non-rational",
                      r.cone_point.verdict == Verdict::Witness && static_cast<bool>(verify_certificate(r.cone_point)),
                      r.cone_point.witness ? "witness i=" + std::to_string(r.cone_point.witness->degree) +
                                                 " m=" + std::to_string(r.cone_point.witness->m) + " h = " +
                                                 r.cone_point.witness->dim.to_string()
                                           : "no witness"});
  r.checks.push_back({"H^1(X, L) = 2(g-1)", r.h1_of_L == DimValue::exact(2 * (g - 1)),
                      "H^1(X, L) = " + r.h1_of_L.to_string()});
  r.checks.push_back({"H^2(X, O_X) = 0", r.h2_of_structure_sheaf.is_zero(),
                      "H^2(X, O_X) = " + r.h2_of_structure_sheaf.to_string()});
  r.checks.push_back({"top cohomology check", r.top.pass,
                      r.top.pass ? "h2(mL) = 0 for m in [0," + std::to_string(r.top.bound_m0) +
                                       "] (necessary condition satisfied)"
                                 : "h2(mL) != 0 at m=" + std::to_string(*r.top.failing_m)});
  const bool all_witness = r.summary.witnesses == r.summary.cells;
  r.checks.push_back({"no rationalizing divisor",
                      r.search.verdict == SearchVerdict::NonexistenceProved && r.summary.proof_valid && all_witness &&
                          r.summary.valid_certificates == r.summary.cells &&
                          r.summary.pattern_matches == r.summary.cells,
                      r.headline()});
  return r;
}

}  // namespace rcone
