#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hirz {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: integer literals promote
  Rational(const Integer& value) : v_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Accepts "n" or "n/d" with optional leading sign.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, int exponent);
Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace hirz
