#include "eulerfan/rational.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace eulerfan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long long n) : v_(0) {
  mpz_class z;
  if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max()) {
    z = static_cast<long>(n);
  } else {
    z = mpz_class(std::to_string(n), 10);
  }
  v_ = mpq_class(z);
}

Rational::Rational(long num, long den) : v_(0) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  v_ = std::move(q);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("not representable: non-finite double");
  mpq_class q(x);  // exact for finite doubles
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_string(std::string_view s) {
  std::string_view orig = s;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational string");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), orig);
    mpz_class den = parse_integer(s.substr(slash + 1), orig);
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  // decimal / integer, optional exponent
  std::string_view mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    std::string_view es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6)
      throw std::invalid_argument("not a rational number: '" + std::string(orig) + "'");
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
  }

  std::string digits;
  long frac_digits = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view a = mant.substr(0, dot), b = mant.substr(dot + 1);
    if (b.find_first_of("+-.") != std::string_view::npos || b.empty())
      throw std::invalid_argument("not a rational number: '" + std::string(orig) + "'");
    digits = std::string(a) + std::string(b);
    frac_digits = static_cast<long>(b.size());
  } else {
    digits = std::string(mant);
  }
  mpz_class num = parse_integer(digits, orig);
  long k = frac_digits - exp10;
  mpz_class pow10 = 1;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  mpq_class q;
  if (k >= 0)
    q = mpq_class(num, pow10);
  else
    q = mpq_class(num * pow10);
  q.canonicalize();
  return Rational(std::move(q));
}

double Rational::to_double() const {
  double d = v_.get_d();  // within one ulp (truncated toward zero)
  if (!std::isfinite(d)) return d;
  double cand[3] = {d, std::nextafter(d, std::numeric_limits<double>::infinity()),
                    std::nextafter(d, -std::numeric_limits<double>::infinity())};
  double best = d;
  Rational best_err = (*this - from_double(d)).abs();
  for (int i = 1; i < 3; ++i) {
    if (!std::isfinite(cand[i])) continue;
    Rational err = (*this - from_double(cand[i])).abs();
    if (err < best_err) {
      best = cand[i];
      best_err = err;
    } else if (err == best_err && cand[i] != best) {
      // tie: round to even mantissa
      if ((std::bit_cast<std::uint64_t>(cand[i]) & 1u) == 0 &&
          (std::bit_cast<std::uint64_t>(best) & 1u) != 0)
        best = cand[i];
    }
  }
  return best;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::operator-() const {
  mpq_class r;
  mpq_neg(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::sqrt_upper(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative rational");
  if (x.is_zero()) return Rational();
  // sqrt(a/b) = sqrt(a*b)/b <= (floor(sqrt(a*b*2^128)) + 1) / (b*2^64)
  const unsigned long k = 64;
  mpz_class num = x.v_.get_num(), den = x.v_.get_den();
  mpz_class n = num * den;
  n <<= 2 * k;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  root += 1;
  mpz_class scaled_den = den;
  scaled_den <<= k;
  mpq_class q(root, scaled_den);
  q.canonicalize();
  Rational u(std::move(q));
  return u;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace eulerfan
