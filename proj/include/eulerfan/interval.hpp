#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>

#include "eulerfan/rational.hpp"

namespace eulerfan {

/// Closed interval [lo, hi] over exact rationals. Arithmetic produces
/// enclosures: x in X, y in Y implies x op y in X op Y, with no rounding
/// anywhere. Division by an interval containing zero is an error.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(int n) : lo(n), hi(n) {}
  Interval(Rational point) : lo(point), hi(std::move(point)) {}
  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) throw std::invalid_argument("interval with lo > hi");
  }

  static Interval hull(std::span<const Rational> values, const Rational& radius) {
    if (values.empty()) throw std::invalid_argument("interval hull of empty list");
    if (radius.sign() < 0) throw std::invalid_argument("negative hull radius");
    Rational lo = values[0], hi = values[0];
    for (const Rational& v : values) {
      if (v < lo) lo = v;
      if (hi < v) hi = v;
    }
    return Interval(lo - radius, hi + radius);
  }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  Rational width() const { return hi - lo; }
  Rational mag() const { return std::max(lo.abs(), hi.abs()); }

  Interval operator-() const { return Interval(-hi, -lo); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
      throw std::domain_error("interval division by an interval containing zero");
    Interval inv(b.hi.reciprocal(), b.lo.reciprocal());
    return a * inv;
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

}  // namespace eulerfan
