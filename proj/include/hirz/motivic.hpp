#pragma once

#include "hirz/expr.hpp"
#include "hirz/hodge.hpp"

namespace hirz {

/// Element of the Grothendieck ring of varieties (localized at L), carried by its Hodge
/// realization [H^*_c(X)] together with the expression that produced it.
class MotivicClass {
 public:
  MotivicClass(HodgeDiamond realization, ExprPtr expr)
      : realization_(std::move(realization)), expr_(std::move(expr)) {}

  const HodgeDiamond& realization() const { return realization_; }
  const ExprPtr& expr() const { return expr_; }

 private:
  HodgeDiamond realization_;
  ExprPtr expr_;
};

/// point, A^n, L, G_m, P^n, a genus-g curve. Throws InvalidParameter for negative parameters.
MotivicClass motivic_atom(AtomKind kind, long long parameter = 0);
MotivicClass motivic_custom(HodgeDiamond realization, std::string label = "custom");
/// n times the class of a point.
MotivicClass motivic_integer(long long n);

enum class CombineOp { Add, Sub, Mul };
MotivicClass motivic_combine(const MotivicClass& a, const MotivicClass& b, CombineOp op);

inline MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) { return motivic_combine(a, b, CombineOp::Add); }
inline MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) { return motivic_combine(a, b, CombineOp::Sub); }
inline MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) { return motivic_combine(a, b, CombineOp::Mul); }

/// Duality involution; on realizations h(p,q) -> h(-p,-q).
MotivicClass motivic_dual(const MotivicClass& a);

/// P^n minus k hyperplanes in general position: sum_j (-1)^j C(k,j) [P^{n-j}] over j <= min(k,n).
MotivicClass motivic_arrangement_complement(int n, int k);

/// Evaluates a display tree.
MotivicClass evaluate(const ExprPtr& expr);

/// Compactly supported chi_y of the class.
inline LaurentY chi_c_y(const MotivicClass& a) { return chi_y(a.realization()); }
inline PolyUV e_polynomial(const MotivicClass& a) { return e_polynomial(a.realization()); }

}  // namespace hirz
