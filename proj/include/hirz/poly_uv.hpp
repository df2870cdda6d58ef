#pragma once

#include <map>
#include <utility>

#include "hirz/laurent.hpp"
#include "hirz/rational.hpp"

namespace hirz {

/// Laurent polynomial in u, v with integer coefficients (target of the E-polynomial).
class PolyUV {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Integer>;

  PolyUV() = default;
  PolyUV(long constant);  // NOLINT
  explicit PolyUV(Terms terms);

  static PolyUV monomial(const Integer& coefficient, int u_exp, int v_exp);
  static PolyUV u() { return monomial(1, 1, 0); }
  static PolyUV v() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  Integer coefficient(int a, int b) const;
  bool is_zero() const { return terms_.empty(); }

  /// Exchange u and v.
  PolyUV swapped() const;

  PolyUV& operator+=(const PolyUV& o);
  PolyUV& operator-=(const PolyUV& o);
  friend PolyUV operator+(PolyUV a, const PolyUV& b) { return a += b; }
  friend PolyUV operator-(PolyUV a, const PolyUV& b) { return a -= b; }
  friend PolyUV operator*(const PolyUV& a, const PolyUV& b);
  PolyUV operator-() const;
  friend bool operator==(const PolyUV& a, const PolyUV& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponent& e, const Integer& c);
  Terms terms_;
};

/// u -> mu, v -> nu with mu, nu Laurent monomials or non-zero constants in y.
LaurentY substitute(const PolyUV& p, const LaurentY& mu, const LaurentY& nu);

/// u -> mu, v -> nu with mu, nu Laurent monomials in u, v (e.g. u^-1, v^-1) or constants.
PolyUV substitute(const PolyUV& p, const PolyUV& mu, const PolyUV& nu);

/// u -> -y, v -> 1
inline LaurentY chi_y_specialization(const PolyUV& p) {
  return substitute(p, -LaurentY::y(), LaurentY(1));
}

}  // namespace hirz
