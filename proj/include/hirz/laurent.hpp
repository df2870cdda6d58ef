#pragma once

#include <map>

#include "hirz/rational.hpp"

namespace hirz {

/// Laurent polynomial in y with rational coefficients. Zero coefficients are never stored.
class LaurentY {
 public:
  using Terms = std::map<int, Rational>;

  LaurentY() = default;
  LaurentY(long constant) : LaurentY(Rational(constant)) {}  // NOLINT
  LaurentY(const Rational& constant);  // NOLINT
  explicit LaurentY(Terms terms);

  static LaurentY monomial(const Rational& coefficient, int exponent);
  /// y^exponent
  static LaurentY y(int exponent = 1) { return monomial(Rational(1), exponent); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Only meaningful for non-zero values.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  bool has_integer_coefficients() const;

  /// y -> 1/y
  LaurentY inverted() const;
  /// Throws std::domain_error for y = 0 with negative exponents present.
  Rational evaluate(const Rational& y) const;
  LaurentY pow(unsigned exponent) const;

  LaurentY& operator+=(const LaurentY& o);
  LaurentY& operator-=(const LaurentY& o);
  LaurentY& operator*=(const LaurentY& o) { return *this = *this * o; }
  LaurentY& operator*=(const Rational& c);

  friend LaurentY operator+(LaurentY a, const LaurentY& b) { return a += b; }
  friend LaurentY operator-(LaurentY a, const LaurentY& b) { return a -= b; }
  friend LaurentY operator*(const LaurentY& a, const LaurentY& b);
  friend LaurentY operator*(LaurentY a, const Rational& c) { return a *= c; }
  friend LaurentY operator*(const Rational& c, LaurentY a) { return a *= c; }
  LaurentY operator-() const;

  friend bool operator==(const LaurentY& a, const LaurentY& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int exponent, const Rational& c);

  Terms terms_;
};

/// 1 + y, the only denominator that ever appears.
inline LaurentY one_plus_y() { return LaurentY(1) + LaurentY::y(); }

}  // namespace hirz
