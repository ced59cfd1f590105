#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace eulerfan {

/// Exact arbitrary-precision rational number.
///
/// Always kept in canonical form: denominator > 0, gcd(|num|, den) == 1,
/// zero stored as 0/1. Canonical form makes equality-to-zero a syntactic
/// test, which is what the exact certificates rely on.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n);
  Rational(long num, long den);

  /// Exact conversion; every finite binary64 is a dyadic rational.
  /// Throws std::domain_error for NaN or infinities.
  static Rational from_double(double x);

  /// Accepts "p/q", plain integers, and decimal literals ("-0.125",
  /// "2.5e-3"). Decimals are parsed exactly as d * 10^(-k).
  static Rational from_string(std::string_view s);

  /// Nearest binary64 (ties to even).
  double to_double() const;

  /// "p/q" in base 10, or just "p" when the denominator is 1.
  std::string str() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  /// A rational u with u*u >= x, tight to roughly 2^-64 relative error.
  /// Throws std::domain_error for negative x.
  static Rational sqrt_upper(const Rational& x);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace eulerfan
