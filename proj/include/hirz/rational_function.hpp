#pragma once

#include "hirz/laurent.hpp"

namespace hirz {

/// numerator / (1+y)^k. Normalized: (1+y) does not divide the numerator when k > 0,
/// and zero is stored with k = 0, so equal values have equal representations.
class RationalFunctionY {
 public:
  RationalFunctionY() = default;
  RationalFunctionY(long c) : RationalFunctionY(LaurentY(c)) {}  // NOLINT
  RationalFunctionY(const Rational& c) : RationalFunctionY(LaurentY(c)) {}  // NOLINT
  RationalFunctionY(LaurentY numerator, int denominator_power = 0);  // NOLINT

  const LaurentY& numerator() const { return num_; }
  int denominator_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return k_ == 0; }

  /// y -> 1/y; (1+1/y)^-k = y^k (1+y)^-k keeps the denominator in the same form.
  RationalFunctionY inverted() const;
  /// Throws NotPolynomial at y = -1 when a pole remains.
  Rational evaluate(const Rational& y) const;

  RationalFunctionY& operator+=(const RationalFunctionY& o);
  RationalFunctionY& operator-=(const RationalFunctionY& o);
  RationalFunctionY& operator*=(const RationalFunctionY& o);
  RationalFunctionY& operator*=(const Rational& c);

  friend RationalFunctionY operator+(RationalFunctionY a, const RationalFunctionY& b) { return a += b; }
  friend RationalFunctionY operator-(RationalFunctionY a, const RationalFunctionY& b) { return a -= b; }
  friend RationalFunctionY operator*(RationalFunctionY a, const RationalFunctionY& b) { return a *= b; }
  friend RationalFunctionY operator*(RationalFunctionY a, const Rational& c) { return a *= c; }
  friend RationalFunctionY operator*(const Rational& c, RationalFunctionY a) { return a *= c; }
  RationalFunctionY operator-() const { return RationalFunctionY(-num_, k_); }

  friend bool operator==(const RationalFunctionY& a, const RationalFunctionY& b) {
    return a.k_ == b.k_ && a.num_ == b.num_;
  }

 private:
  LaurentY num_;
  int k_ = 0;
};

/// Exact division by (1+y); returns false (and leaves quotient untouched) if it does not divide.
bool divide_by_one_plus_y(const LaurentY& p, LaurentY& quotient);

/// Cancels every (1+y) factor of the denominator; throws NotPolynomial if one survives.
LaurentY reduce_unit_denominator(const RationalFunctionY& q);

}  // namespace hirz
