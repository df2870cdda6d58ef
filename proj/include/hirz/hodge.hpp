#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hirz/laurent.hpp"
#include "hirz/poly_uv.hpp"
#include "hirz/rational.hpp"

namespace hirz {

/// Class in the Grothendieck group of mixed Hodge structures, recorded by its virtual
/// Hodge numbers h(p,q) = dim Gr_F^p Gr^W_{p+q}. Zero entries are never stored.
class HodgeDiamond {
 public:
  using Index = std::pair<int, int>;
  using Entries = std::map<Index, Integer>;

  HodgeDiamond() = default;
  explicit HodgeDiamond(Entries entries);

  /// Pure of the given weight: throws InvalidParameter unless p+q = weight everywhere
  /// and h(p,q) = h(q,p).
  static HodgeDiamond pure(int weight, Entries entries);
  /// The Tate structure Q(n), a single atom at (-n,-n).
  static HodgeDiamond tate(int n);

  const Entries& entries() const { return h_; }
  Integer at(int p, int q) const;
  std::optional<int> pure_weight() const { return weight_; }
  bool is_zero() const { return h_.empty(); }
  /// Sum of all h(p,q), the virtual dimension.
  Integer total_dimension() const;

  HodgeDiamond& operator+=(const HodgeDiamond& o);
  HodgeDiamond& operator-=(const HodgeDiamond& o);
  friend HodgeDiamond operator+(HodgeDiamond a, const HodgeDiamond& b) { return a += b; }
  friend HodgeDiamond operator-(HodgeDiamond a, const HodgeDiamond& b) { return a -= b; }
  friend HodgeDiamond operator*(const Integer& n, const HodgeDiamond& a);
  HodgeDiamond operator-() const;

  /// Compares Hodge numbers only.
  friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) { return a.h_ == b.h_; }

 private:
  friend HodgeDiamond tensor(const HodgeDiamond&, const HodgeDiamond&);
  friend HodgeDiamond dual(const HodgeDiamond&);
  friend HodgeDiamond tate_twist(const HodgeDiamond&, int);

  void add(const Index& i, const Integer& c);

  Entries h_;
  std::optional<int> weight_;
};

HodgeDiamond tensor(const HodgeDiamond& a, const HodgeDiamond& b);
/// h'(p,q) = h(-p,-q)
HodgeDiamond dual(const HodgeDiamond& a);
/// Tensor with Q(n): shifts every (p,q) by (-n,-n).
HodgeDiamond tate_twist(const HodgeDiamond& a, int n);

/// E = sum h(p,q) u^p v^q
PolyUV e_polynomial(const HodgeDiamond& a);
/// chi_y = sum_p (sum_q h(p,q)) (-y)^p
LaurentY chi_y(const HodgeDiamond& a);

/// "[[p,q,h],...]" in increasing (p,q) order.
std::string render_triples(const HodgeDiamond& a);

}  // namespace hirz
