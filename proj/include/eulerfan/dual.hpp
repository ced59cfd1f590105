#pragma once

#include <array>

#include "eulerfan/fan.hpp"
#include "eulerfan/interval.hpp"

namespace eulerfan {

/// Forward-mode derivative tracking over interval arithmetic, with six
/// seed directions. Evaluating an expression with Dual6 inputs yields a
/// rigorous enclosure of the expression's value and of its six partial
/// derivatives over the input box; those partial enclosures are exactly
/// the Lipschitz data the margin-survival check needs.
struct Dual6 {
  Interval val;
  std::array<Interval, 6> d{};

  Dual6() = default;
  Dual6(int n) : val(n) {}
  explicit Dual6(Interval v) : val(std::move(v)) {}

  static Dual6 constant(const Rational& r) { return Dual6(Interval(r)); }
  static Dual6 seeded(Interval range, int slot) {
    Dual6 x(std::move(range));
    x.d[static_cast<size_t>(slot)] = Interval(1);
    return x;
  }

  Dual6 operator-() const {
    Dual6 r(-val);
    for (size_t i = 0; i < 6; ++i) r.d[i] = -d[i];
    return r;
  }

  friend Dual6 operator+(const Dual6& a, const Dual6& b) {
    Dual6 r(a.val + b.val);
    for (size_t i = 0; i < 6; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
  }
  friend Dual6 operator-(const Dual6& a, const Dual6& b) {
    Dual6 r(a.val - b.val);
    for (size_t i = 0; i < 6; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
  }
  friend Dual6 operator*(const Dual6& a, const Dual6& b) {
    Dual6 r(a.val * b.val);
    for (size_t i = 0; i < 6; ++i) r.d[i] = a.val * b.d[i] + b.val * a.d[i];
    return r;
  }
  friend Dual6 operator/(const Dual6& a, const Dual6& b) {
    Dual6 r(a.val / b.val);
    for (size_t i = 0; i < 6; ++i)
      r.d[i] = (a.d[i] * b.val - a.val * b.d[i]) / (b.val * b.val);
    return r;
  }

  Dual6& operator+=(const Dual6& o) { return *this = *this + o; }
  Dual6& operator-=(const Dual6& o) { return *this = *this - o; }
  Dual6& operator*=(const Dual6& o) { return *this = *this * o; }
  Dual6& operator/=(const Dual6& o) { return *this = *this / o; }
};

template <>
inline Dual6 scalar_from_rational<Dual6>(const Rational& r) {
  return Dual6::constant(r);
}

template <>
inline Interval scalar_from_rational<Interval>(const Rational& r) {
  return Interval(r);
}

}  // namespace eulerfan
