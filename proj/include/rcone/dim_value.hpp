#pragma once

// Three-valued cohomology dimensions: an exactly known value, or a closed
// interval [lo, hi] with lo < hi when only bounds are available.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rcone {

using Int = std::int64_t;

namespace checked {

inline Int add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace checked

enum class Truth { False, True, Unknown };

class DimValue {
 public:
  static DimValue exact(Int v) {
    if (v < 0) throw std::invalid_argument("DimValue: negative dimension " + std::to_string(v));
    return DimValue(v, v);
  }

  // Degenerate ranges collapse to Exact.
  static DimValue range(Int lo, Int hi) {
    if (lo < 0 || hi < lo)
      throw std::invalid_argument("DimValue: invalid range [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    return DimValue(lo, hi);
  }

  static DimValue zero() { return exact(0); }

  bool is_exact() const { return lo_ == hi_; }
  Int lo() const { return lo_; }
  Int hi() const { return hi_; }

  // Only meaningful when is_exact().
  Int value() const {
    if (!is_exact()) throw std::logic_error("DimValue::value on a range");
    return lo_;
  }

  bool is_zero() const { return hi_ == 0; }
  bool is_nonzero() const { return lo_ >= 1; }
  bool is_indeterminate() const { return !is_zero() && !is_nonzero(); }

  Truth vanishes() const {
    if (is_zero()) return Truth::True;
    if (is_nonzero()) return Truth::False;
    return Truth::Unknown;
  }

  bool contains(Int v) const { return lo_ <= v && v <= hi_; }
  bool contains(const DimValue& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  // Translate both endpoints, clamping at zero.
  DimValue shifted(Int delta) const {
    Int lo = checked::add(lo_, delta);
    Int hi = checked::add(hi_, delta);
    if (lo < 0) lo = 0;
    if (hi < 0) hi = 0;
    return DimValue(lo, hi);
  }

  friend DimValue operator+(const DimValue& x, const DimValue& y) {
    return DimValue(checked::add(x.lo_, y.lo_), checked::add(x.hi_, y.hi_));
  }

  // Endpoints are non-negative, so the product interval is [lo*lo, hi*hi].
  friend DimValue operator*(const DimValue& x, const DimValue& y) {
    return DimValue(checked::mul(x.lo_, y.lo_), checked::mul(x.hi_, y.hi_));
  }

  friend bool operator==(const DimValue&, const DimValue&) = default;

  std::string to_string() const {
    if (is_exact()) return std::to_string(lo_);
    return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const DimValue& d) {
    if (d.is_exact()) return os << "Exact(" << d.lo_ << ")";
    return os << "Range(" << d.lo_ << ", " << d.hi_ << ")";
  }

 private:
  DimValue(Int lo, Int hi) : lo_(lo), hi_(hi) {}

  Int lo_;
  Int hi_;
};

}  // namespace rcone
