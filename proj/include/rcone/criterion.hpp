#pragma once

// Cone-rationality decision procedure.
//
// For a rational pair (X, D) and ample L, the cone pair over (X, D) is
// rational iff H^i(X, L^m(-D)) = 0 for all i > 0 and m >= 0. On the product
// surface only i = 1, 2 can contribute, and past serre_bound() every twist
// m L - D has P1-degree >= 0 and C-degree > 2g-2, which kills h1 and h2. The
// infinite quantifier over m therefore reduces to the scan [0, m0].

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rcone/curve.hpp"
#include "rcone/dim_value.hpp"
#include "rcone/surface.hpp"

namespace rcone {

// Internal invariant broken; distinct from precondition failures, which are
// reported as std::invalid_argument.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ConeProblem {
  CurveModel model{0, PointMode::Generic};
  SurfaceClass L;  // polarization
  SurfaceClass D;  // candidate divisor class

  friend bool operator==(const ConeProblem&, const ConeProblem&) = default;
};

inline void validate(const ConeProblem& p) {
  if (!is_ample(p.L)) throw std::invalid_argument("polarization L=" + p.L.to_string() + " is not ample");
  if (!is_effective_class(p.D))
    throw std::invalid_argument("divisor class D=" + p.D.to_string() + " is not effective");
}

enum class Verdict { AllVanish, Witness, Indeterminate };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AllVanish: return "all_vanish";
    case Verdict::Witness: return "witness";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

inline Verdict verdict_from_string(std::string_view s) {
  if (s == "all_vanish") return Verdict::AllVanish;
  if (s == "witness") return Verdict::Witness;
  if (s == "indeterminate") return Verdict::Indeterminate;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

struct Witness {
  int degree;  // i in {1, 2}
  Int m;
  DimValue dim;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ScanPoint {
  int degree;
  Int m;

  friend bool operator==(const ScanPoint&, const ScanPoint&) = default;
};

struct Certificate {
  Verdict verdict = Verdict::AllVanish;
  std::optional<Witness> witness;
  Int bound_m0 = 0;
  std::vector<std::string> assumptions;
  ConeProblem problem;
  // (i, m) pairs whose dimension straddles zero; non-empty only for Indeterminate.
  std::vector<ScanPoint> indeterminate;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace assumption {
inline constexpr const char* kRationalPair = "(X, D) is a rational pair";
inline constexpr const char* kSncRepresentative = "snc representative exists";
inline constexpr const char* kGenericPoint = "generic point mode";
inline constexpr const char* kArbitraryPoint = "arbitrary point mode";
}  // namespace assumption

inline std::vector<std::string> standard_assumptions(const CurveModel& model) {
  return {assumption::kRationalPair, assumption::kSncRepresentative,
          model.mode() == PointMode::Generic ? assumption::kGenericPoint : assumption::kArbitraryPoint};
}

namespace detail {

// ceil(x / y) for y > 0.
inline Int ceil_div(Int x, Int y) {
  Int q = x / y;
  if (x % y != 0 && x > 0) ++q;
  return q;
}

}  // namespace detail

inline Int serre_bound(const CurveModel& model, SurfaceClass L, SurfaceClass D) {
  if (!is_ample(L)) throw std::invalid_argument("serre_bound: L=" + L.to_string() + " is not ample");
  const Int along_p1 = detail::ceil_div(D.a, L.a);
  const Int along_curve = detail::ceil_div(checked::add(D.b, checked::sub(checked::mul(2, model.genus()), 1)), L.b);
  return std::max<Int>({along_p1, along_curve, 0});
}

// Class of L^m(-D).
inline SurfaceClass twist(const ConeProblem& p, Int m) { return m * p.L - p.D; }

inline Certificate cone_check(const ConeProblem& p) {
  validate(p);
  Certificate cert{Verdict::AllVanish, std::nullopt, serre_bound(p.model, p.L, p.D),
                   standard_assumptions(p.model), p, {}};
  for (Int m = 0; m <= cert.bound_m0; ++m) {
    const SurfaceClass c = twist(p, m);
    for (int i : {1, 2}) {
      const DimValue h = kunneth_h(p.model, c, i);
      if (h.is_nonzero()) {
        cert.verdict = Verdict::Witness;
        cert.witness = Witness{i, m, h};
        cert.indeterminate.clear();
        return cert;
      }
      if (h.is_indeterminate()) cert.indeterminate.push_back({i, m});
    }
  }
  if (!cert.indeterminate.empty()) {
    if (p.model.mode() == PointMode::Generic)
      throw InvariantViolation("indeterminate dimension in generic point mode");
    cert.verdict = Verdict::Indeterminate;
  }
  return cert;
}

struct CheckResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }

  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// Re-derives a certificate from its problem by independent re-evaluation of
// every scanned dimension.
inline CheckResult verify_certificate(const Certificate& cert) {
  const ConeProblem& p = cert.problem;
  if (!is_ample(p.L) || !is_effective_class(p.D)) return CheckResult::fail("problem violates preconditions");
  if (cert.bound_m0 != serre_bound(p.model, p.L, p.D)) return CheckResult::fail("bound_m0 mismatch");
  if (cert.assumptions != standard_assumptions(p.model)) return CheckResult::fail("assumption list mismatch");

  switch (cert.verdict) {
    case Verdict::Witness: {
      if (!cert.witness) return CheckResult::fail("witness verdict without witness");
      const Witness& w = *cert.witness;
      if (w.degree != 1 && w.degree != 2) return CheckResult::fail("witness degree outside {1,2}");
      if (w.m < 0 || w.m > cert.bound_m0) return CheckResult::fail("witness m outside [0, bound_m0]");
      const DimValue h = kunneth_h(p.model, twist(p, w.m), w.degree);
      if (h != w.dim) return CheckResult::fail("witness dimension does not reproduce: got " + h.to_string());
      if (!h.is_nonzero()) return CheckResult::fail("witness dimension is not nonzero");
      // Minimality in scan order.
      for (Int m = 0; m <= w.m; ++m)
        for (int i : {1, 2}) {
          if (m == w.m && i == w.degree) return {};
          if (kunneth_h(p.model, twist(p, m), i).is_nonzero())
            return CheckResult::fail("earlier witness exists at i=" + std::to_string(i) + " m=" + std::to_string(m));
        }
      return {};
    }
    case Verdict::AllVanish:
    case Verdict::Indeterminate: {
      if (cert.witness) return CheckResult::fail("non-witness verdict carries a witness");
      std::vector<ScanPoint> open;
      for (Int m = 0; m <= cert.bound_m0; ++m)
        for (int i : {1, 2}) {
          const DimValue h = kunneth_h(p.model, twist(p, m), i);
          if (h.is_nonzero()) return CheckResult::fail("nonzero dimension missed at m=" + std::to_string(m));
          if (h.is_indeterminate()) open.push_back({i, m});
        }
      if (cert.verdict == Verdict::AllVanish && !open.empty())
        return CheckResult::fail("all_vanish verdict but some dimension is indeterminate");
      if (cert.verdict == Verdict::Indeterminate) {
        if (open.empty()) return CheckResult::fail("indeterminate verdict but everything vanishes");
        if (p.model.mode() != PointMode::Arbitrary)
          return CheckResult::fail("indeterminate verdict in generic point mode");
        if (open != cert.indeterminate) return CheckResult::fail("indeterminate list mismatch");
      }
      return {};
    }
  }
  return CheckResult::fail("unknown verdict");
}

// Necessary condition: if C(X, L) has a rationalizing divisor then
// H^2(X, L^m) = 0 for all m >= 0.
struct TopCohomologyResult {
  bool pass = false;
  Int bound_m0 = 0;
  std::optional<Int> failing_m;
  std::optional<DimValue> failing_value;
};

inline TopCohomologyResult top_cohomology_check(const CurveModel& model, SurfaceClass L) {
  const Int m0 = serre_bound(model, L, SurfaceClass{0, 0});
  for (Int m = 0; m <= m0; ++m) {
    const DimValue h2 = kunneth_h(model, m * L, 2);
    if (!h2.is_zero()) return {false, m0, m, h2};
  }
  return {true, m0, std::nullopt, std::nullopt};
}

// Codimension of the non-rational locus of X; an empty locus has infinite codimension.
class Codimension {
 public:
  static Codimension of(Int c) {
    if (c <= 0)
      throw std::invalid_argument("codimension must be >= 1 (got " + std::to_string(c) +
                                  "); a non-rational locus of codimension 0 contradicts normality");
    return Codimension(c);
  }
  static Codimension empty_locus() { return Codimension(std::nullopt); }

  bool is_empty() const { return !value_.has_value(); }
  Int value() const { return value_.value(); }

 private:
  explicit Codimension(std::optional<Int> v) : value_(v) {}
  std::optional<Int> value_;
};

// A rational pair has non-rational locus of codimension at least 3.
inline bool codim_precheck(Codimension codim) { return codim.is_empty() || codim.value() >= 3; }

}  // namespace rcone
