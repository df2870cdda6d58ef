#pragma once

#include "hirz/bundle.hpp"
#include "hirz/space.hpp"

namespace hirz {

/// Element of K^0(M)[y, 1/y] recorded by its virtual rank and Chern character, both with
/// Laurent-in-y coefficients. The degree-0 part of the Chern character equals the rank.
class KPolyClass {
 public:
  explicit KPolyClass(CohClassY ch);

  /// [V]
  static KPolyClass of_bundle(const BundleClass& v);
  /// [O_M]
  static KPolyClass unit(const RingPtr& ring);

  const LaurentY& rank_poly() const { return rank_; }
  const CohClassY& ch() const { return ch_; }
  const RingPtr& ring() const { return ch_.ring(); }

  KPolyClass& operator+=(const KPolyClass& o);
  KPolyClass& operator-=(const KPolyClass& o);
  friend KPolyClass operator+(KPolyClass a, const KPolyClass& b) { return a += b; }
  friend KPolyClass operator-(KPolyClass a, const KPolyClass& b) { return a -= b; }
  /// Tensor product of classes.
  friend KPolyClass operator*(const KPolyClass& a, const KPolyClass& b) { return KPolyClass(a.ch_ * b.ch_); }
  friend KPolyClass operator*(const LaurentY& s, const KPolyClass& a) { return KPolyClass(a.ch_.scaled(s)); }
  friend bool operator==(const KPolyClass& a, const KPolyClass& b) { return a.ch_ == b.ch_; }

 private:
  LaurentY rank_;
  CohClassY ch_;
};

/// lambda_y(V) = sum_i Lambda^i(V) y^i, computed from e_i(e^{a_1},...,e^{a_r}) with
/// power sums sum_j e^{k a_j} and Newton's identities. Coefficients stay in Q[y].
KPolyClass lambda_y(const BundleClass& v);

/// Grothendieck duality on a smooth m-dimensional model:
/// [F] -> (-1)^m [F^dual (x) omega_M], then y -> 1/y.
KPolyClass k_dual(const KPolyClass& k, const SpaceModel& space);

/// y -> 1/y on every coefficient.
CohClassY invert_y(const CohClassY& c);

}  // namespace hirz
