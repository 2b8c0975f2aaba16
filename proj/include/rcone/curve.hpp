#pragma once

// Cohomology of O_C(nQ) on a smooth projective curve C of genus g, and of
// O(n) on the projective line.
//
// The curve is abstracted to its genus and an assumption about the
// distinguished point Q. With PointMode::Generic, Q has the ordinary gap
// sequence 1..g, so h0(nQ) is known exactly for every n. With
// PointMode::Arbitrary nothing is assumed about Q and, in the special range
// 2 <= n <= 2g-2, h0 is only bounded below by Riemann-Roch and above by
// Clifford's theorem.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rcone/dim_value.hpp"

namespace rcone {

enum class PointMode { Generic, Arbitrary };

inline std::string_view to_string(PointMode m) {
  return m == PointMode::Generic ? "generic" : "arbitrary";
}

inline PointMode point_mode_from_string(std::string_view s) {
  if (s == "generic") return PointMode::Generic;
  if (s == "arbitrary") return PointMode::Arbitrary;
  throw std::invalid_argument("unknown point mode '" + std::string(s) + "' (expected generic|arbitrary)");
}

class CurveModel {
 public:
  CurveModel(Int genus, PointMode mode) : genus_(genus), mode_(mode) {
    if (genus < 0) throw std::invalid_argument("CurveModel: genus must be >= 0, got " + std::to_string(genus));
  }

  Int genus() const { return genus_; }
  PointMode mode() const { return mode_; }

  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  Int genus_;
  PointMode mode_;
};

inline DimValue h0_p1(Int n) { return DimValue::exact(n >= -1 ? checked::add(n, 1) : 0); }

inline DimValue h1_p1(Int n) { return DimValue::exact(n <= -1 ? checked::sub(-1, n) : 0); }

inline DimValue h0_curve(const CurveModel& model, Int n) {
  const Int g = model.genus();
  const Int canonical = 2 * g - 2;
  if (n < 0) return DimValue::zero();
  if (n == 0) return DimValue::exact(1);
  if (n == 1 && g >= 1) return DimValue::exact(1);
  if (n > canonical) return DimValue::exact(checked::add(n - g, 1));
  if (model.mode() == PointMode::Generic) return DimValue::exact(n <= g ? 1 : n - g + 1);

  // Special range 2 <= n <= 2g-2 at an arbitrary point.
  const Int lo = std::max<Int>(1, n - g + 1);
  const Int hi = std::max(lo, n / 2 + 1);
  return DimValue::range(lo, hi);
}

// Riemann-Roch: h1 = h0 - n + g - 1. Exact for n < 0 and n > 2g-2.
inline DimValue h1_curve(const CurveModel& model, Int n) {
  if (n > 2 * model.genus() - 2) return DimValue::zero();
  return h0_curve(model, n).shifted(checked::sub(model.genus() - 1, n));
}

}  // namespace rcone
