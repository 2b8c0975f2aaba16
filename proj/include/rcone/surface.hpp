#pragma once

// Divisor classes a*C0 + b*f on X = C x P1 and the cohomology of the
// corresponding line bundles O_X(a C0 + b f) = xi^* O_P1(a) (x) pi^* O_C(bQ).
//
// C0 is a horizontal section (a copy of C) and f a vertical fiber (a copy of
// P1), so a is the degree along the P1 direction and b the degree along C.

#include <ostream>
#include <stdexcept>
#include <string>

#include "rcone/curve.hpp"
#include "rcone/dim_value.hpp"

namespace rcone {

struct SurfaceClass {
  Int a = 0;  // coefficient of C0
  Int b = 0;  // coefficient of f

  friend SurfaceClass operator+(SurfaceClass x, SurfaceClass y) {
    return {checked::add(x.a, y.a), checked::add(x.b, y.b)};
  }
  friend SurfaceClass operator-(SurfaceClass x, SurfaceClass y) {
    return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)};
  }
  friend SurfaceClass operator*(Int m, SurfaceClass x) {
    return {checked::mul(m, x.a), checked::mul(m, x.b)};
  }
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

  friend std::ostream& operator<<(std::ostream& os, const SurfaceClass& c) { return os << c.to_string(); }
};

inline constexpr SurfaceClass kSection{1, 0};
inline constexpr SurfaceClass kFiber{0, 1};

// C0^2 = f^2 = 0, C0.f = 1.
inline Int intersect(SurfaceClass x, SurfaceClass y) {
  return checked::add(checked::mul(x.a, y.b), checked::mul(y.a, x.b));
}

// Nakai-Moishezon on the product: positive on both rulings.
inline bool is_ample(SurfaceClass c) { return c.a >= 1 && c.b >= 1; }

inline bool is_effective_class(SurfaceClass c) { return c.a >= 0 && c.b >= 0; }

// Kunneth:
//   h0 = h0(P1, a) h0(C, b)
//   h1 = h0(P1, a) h1(C, b) + h1(P1, a) h0(C, b)
//   h2 = h1(P1, a) h1(C, b)
inline DimValue kunneth_h(const CurveModel& model, SurfaceClass c, int degree) {
  switch (degree) {
    case 0:
      return h0_p1(c.a) * h0_curve(model, c.b);
    case 1:
      return h0_p1(c.a) * h1_curve(model, c.b) + h1_p1(c.a) * h0_curve(model, c.b);
    case 2:
      return h1_p1(c.a) * h1_curve(model, c.b);
    default:
      throw std::invalid_argument("kunneth_h: cohomological degree must be 0, 1 or 2, got " +
                                  std::to_string(degree));
  }
}

}  // namespace rcone
