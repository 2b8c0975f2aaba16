#pragma once

// Search for a rationalizing divisor class D = a C0 + b f of the cone over
// X = C x P1.
//
// A grid scan runs cone_check() on every effective class in [0,A] x [0,B].
// For L = C0 + f and g >= 2 a universal statement is also available: with
// d = b - a, the twist at m = b+1 has
//     h1 = max(0, d+2) (g-1) + max(0, -d-2)
// which is positive unless d = -2, and for d = -2 the twist at m = b has
//     h1 = max(0, d+1) g + max(0, -d-1) = 1.
// NonexistenceProof records that case split in a form verify_proof() can
// re-check symbolically for every integer d and every g >= 2.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rcone/criterion.hpp"
#include "rcone/curve.hpp"
#include "rcone/dim_value.hpp"
#include "rcone/surface.hpp"

namespace rcone {

// constant + slope * x
struct AffineForm {
  Int constant = 0;
  Int slope = 0;

  Int at(Int x) const { return checked::add(constant, checked::mul(slope, x)); }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// max(0, p1(d)) * curve(g)
struct ProductTerm {
  AffineForm p1;
  AffineForm curve;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

// h1 of L^m(-D) at m = b + m_offset, as a function of d = b - a and g.
struct WitnessFormula {
  std::string name;
  Int m_offset = 0;
  std::vector<ProductTerm> terms;

  Int evaluate(Int d, Int genus) const {
    Int total = 0;
    for (const auto& t : terms)
      total = checked::add(total, checked::mul(std::max<Int>(0, t.p1.at(d)), t.curve.at(genus)));
    return total;
  }

  friend bool operator==(const WitnessFormula&, const WitnessFormula&) = default;
};

// d ranges over [d_lo, d_hi]; a missing endpoint is unbounded.
struct ProofCase {
  std::string name;
  std::optional<Int> d_lo;
  std::optional<Int> d_hi;
  std::size_t formula = 0;
  Int lower_bound = 1;
  std::string justification;

  friend bool operator==(const ProofCase&, const ProofCase&) = default;
};

struct NonexistenceProof {
  Int genus = 2;      // instance the proof was requested for
  Int genus_min = 2;  // the argument holds for every genus >= genus_min
  SurfaceClass L{1, 1};
  std::vector<WitnessFormula> formulas;
  std::vector<ProofCase> cases;

  friend bool operator==(const NonexistenceProof&, const NonexistenceProof&) = default;
};

namespace detail {

// h0 and h1 of O_C(kQ), k in {0, 1}, as affine functions of g valid for g >= 1.
// Both values are exact in every point mode.
inline AffineForm curve_h0_affine(Int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("curve factor only tabulated for k in {0,1}");
  return {1, 0};
}

inline AffineForm curve_h1_affine(Int k) {
  const AffineForm h0 = curve_h0_affine(k);
  return {h0.constant - k - 1, h0.slope + 1};  // Riemann-Roch
}

// Kunneth h1 at m = b + k for L = (1,1): the twist is (d + k, k).
inline WitnessFormula kunneth_h1_formula(std::string name, Int k) {
  WitnessFormula f{std::move(name), k, {}};
  f.terms.push_back({AffineForm{k + 1, 1}, curve_h1_affine(k)});    // h0(P1, d+k) h1(C, k)
  f.terms.push_back({AffineForm{-k - 1, -1}, curve_h0_affine(k)});  // h1(P1, d+k) h0(C, k)
  return f;
}

// Lower bound of max(0, form) over an interval; unbounded ends push toward -inf or +inf.
inline Int clamped_min(const AffineForm& f, std::optional<Int> lo, std::optional<Int> hi) {
  if (f.slope == 0) return std::max<Int>(0, f.constant);
  const std::optional<Int> at = f.slope > 0 ? lo : hi;
  if (!at) return 0;
  return std::max<Int>(0, f.at(*at));
}

}  // namespace detail

inline NonexistenceProof nonexistence_closed_form(Int genus, SurfaceClass L = {1, 1}) {
  if (genus <= 1) throw std::invalid_argument("closed form requires genus >= 2, got " + std::to_string(genus));
  if (L != SurfaceClass{1, 1}) throw std::invalid_argument("closed form requires L = (1,1), got " + L.to_string());

  NonexistenceProof proof;
  proof.genus = genus;
  proof.L = L;
  proof.formulas.push_back(detail::kunneth_h1_formula("h1 at m=b+1", 1));
  proof.formulas.push_back(detail::kunneth_h1_formula("h1 at m=b", 0));
  proof.cases.push_back({"a < b+2", Int{-1}, std::nullopt, 0, 1,
                         "h0(P1, O(b-a+1)) = b-a+2 >= 1 and h1(C, O(Q)) = g-1 >= 1"});
  proof.cases.push_back({"a = b+2", Int{-2}, Int{-2}, 1, 1,
                         "h1(P1, O(-2)) = 1 and h0(C, O_C) = 1"});
  proof.cases.push_back({"a > b+2", std::nullopt, Int{-3}, 0, 1,
                         "h1(P1, O(b+1-a)) = a-b-2 >= 1 and h0(C, O(Q)) = 1"});
  return proof;
}

inline CheckResult verify_proof(const NonexistenceProof& proof) {
  if (proof.genus_min < 2) return CheckResult::fail("genus_min below 2");
  if (proof.genus < proof.genus_min) return CheckResult::fail("instance genus below genus_min");
  if (proof.L != SurfaceClass{1, 1}) return CheckResult::fail("proof only covers L = (1,1)");
  if (proof.cases.empty()) return CheckResult::fail("no cases");

  // The d-intervals must partition the integers.
  std::vector<ProofCase> sorted = proof.cases;
  std::sort(sorted.begin(), sorted.end(), [](const ProofCase& x, const ProofCase& y) {
    const Int xl = x.d_lo.value_or(std::numeric_limits<Int>::min());
    const Int yl = y.d_lo.value_or(std::numeric_limits<Int>::min());
    return xl < yl;
  });
  if (sorted.front().d_lo) return CheckResult::fail("cases do not cover d -> -inf");
  if (sorted.back().d_hi) return CheckResult::fail("cases do not cover d -> +inf");
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const ProofCase& c = sorted[k];
    if (c.d_lo && c.d_hi && *c.d_lo > *c.d_hi) return CheckResult::fail("empty case '" + c.name + "'");
    if (k + 1 < sorted.size()) {
      if (!c.d_hi || !sorted[k + 1].d_lo || *c.d_hi + 1 != *sorted[k + 1].d_lo)
        return CheckResult::fail("gap or overlap after case '" + c.name + "'");
    }
  }

  // Each formula must be the Kunneth h1 it claims to be.
  for (const auto& f : proof.formulas) {
    for (Int g = proof.genus_min; g <= proof.genus_min + 10; ++g)
      for (PointMode mode : {PointMode::Generic, PointMode::Arbitrary})
        for (Int d = -8; d <= 8; ++d) {
          const Int b = std::max<Int>(0, d) + 3;
          const Int a = b - d;
          const ConeProblem p{CurveModel(g, mode), proof.L, {a, b}};
          const DimValue h = kunneth_h(p.model, twist(p, b + f.m_offset), 1);
          if (!h.is_exact() || h.value() != f.evaluate(d, g))
            return CheckResult::fail("formula '" + f.name + "' disagrees with Kunneth at g=" + std::to_string(g) +
                                     " d=" + std::to_string(d));
        }
  }

  // Positivity on every case, for all g >= genus_min.
  for (const auto& c : proof.cases) {
    if (c.formula >= proof.formulas.size()) return CheckResult::fail("case '" + c.name + "' cites missing formula");
    if (c.lower_bound < 1) return CheckResult::fail("case '" + c.name + "' claims no positive bound");
    Int bound = 0;
    for (const auto& t : proof.formulas[c.formula].terms) {
      if (t.curve.slope < 0) return CheckResult::fail("curve factor decreasing in g");
      const Int curve_min = t.curve.at(proof.genus_min);
      if (curve_min < 0) return CheckResult::fail("curve factor negative at genus_min");
      bound = checked::add(bound, checked::mul(detail::clamped_min(t.p1, c.d_lo, c.d_hi), curve_min));
    }
    if (bound < c.lower_bound)
      return CheckResult::fail("case '" + c.name + "': proved bound " + std::to_string(bound) + " < claimed " +
                               std::to_string(c.lower_bound));
  }
  return {};
}

enum class SearchVerdict { NonexistenceProved, RationalizerFound, GridOnly };

inline std::string_view to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::NonexistenceProved: return "nonexistence_proved";
    case SearchVerdict::RationalizerFound: return "rationalizer_found";
    case SearchVerdict::GridOnly: return "grid_only";
  }
  return "?";
}

inline SearchVerdict search_verdict_from_string(std::string_view s) {
  if (s == "nonexistence_proved") return SearchVerdict::NonexistenceProved;
  if (s == "rationalizer_found") return SearchVerdict::RationalizerFound;
  if (s == "grid_only") return SearchVerdict::GridOnly;
  throw std::invalid_argument("unknown search verdict '" + std::string(s) + "'");
}

struct SearchCell {
  SurfaceClass D;
  Certificate certificate;
  bool pattern_check = false;

  friend bool operator==(const SearchCell&, const SearchCell&) = default;
};

struct SearchReport {
  CurveModel model{0, PointMode::Generic};
  SurfaceClass L{1, 1};
  Int grid_a = 0;
  Int grid_b = 0;
  std::vector<SearchCell> cells;  // row-major over (a, b)
  SearchVerdict verdict = SearchVerdict::GridOnly;
  std::optional<SurfaceClass> rationalizer;
  std::optional<NonexistenceProof> proof;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

// Witness predicted by the two-case analysis: m = b when a = b+2, else m = b+1.
inline Int predicted_witness_m(SurfaceClass D) { return D.a == D.b + 2 ? D.b : D.b + 1; }

inline bool pattern_holds(const CurveModel& model, SurfaceClass L, SurfaceClass D) {
  const ConeProblem p{model, L, D};
  return kunneth_h(model, twist(p, predicted_witness_m(D)), 1).is_nonzero();
}

inline SearchReport search_grid(const CurveModel& model, SurfaceClass L, Int grid_a, Int grid_b) {
  if (!is_ample(L)) throw std::invalid_argument("search_grid: L=" + L.to_string() + " is not ample");
  if (grid_a < 0 || grid_b < 0) throw std::invalid_argument("search_grid: grid limits must be >= 0");

  SearchReport report{model, L, grid_a, grid_b, {}, SearchVerdict::GridOnly, std::nullopt, std::nullopt};
  report.cells.reserve(static_cast<std::size_t>((grid_a + 1) * (grid_b + 1)));
  for (Int a = 0; a <= grid_a; ++a)
    for (Int b = 0; b <= grid_b; ++b) {
      const SurfaceClass D{a, b};
      report.cells.push_back({D, cone_check({model, L, D}), pattern_holds(model, L, D)});
      if (!report.rationalizer && report.cells.back().certificate.verdict == Verdict::AllVanish)
        report.rationalizer = D;
    }

  if (model.genus() >= 2 && L == SurfaceClass{1, 1}) {
    NonexistenceProof proof = nonexistence_closed_form(model.genus(), L);
    if (auto check = verify_proof(proof); !check)
      throw InvariantViolation("closed-form proof failed verification: " + check.reason);
    if (report.rationalizer)
      throw InvariantViolation("grid found rationalizer " + report.rationalizer->to_string() +
                               " although the closed form proves nonexistence");
    report.proof = std::move(proof);
    report.verdict = SearchVerdict::NonexistenceProved;
  } else if (report.rationalizer) {
    report.verdict = SearchVerdict::RationalizerFound;
  }
  return report;
}

struct SearchSummary {
  std::size_t cells = 0;
  std::size_t valid_certificates = 0;
  std::size_t witnesses = 0;
  std::size_t pattern_matches = 0;
  bool proof_valid = false;
};

inline SearchSummary summarize(const SearchReport& report) {
  SearchSummary s;
  s.cells = report.cells.size();
  for (const auto& cell : report.cells) {
    if (verify_certificate(cell.certificate)) ++s.valid_certificates;
    if (cell.certificate.verdict == Verdict::Witness) ++s.witnesses;
    if (cell.pattern_check) ++s.pattern_matches;
  }
  s.proof_valid = report.proof && static_cast<bool>(verify_proof(*report.proof));
  return s;
}

}  // namespace rcone
