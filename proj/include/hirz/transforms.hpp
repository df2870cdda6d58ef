#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirz/kclass.hpp"
#include "hirz/maps.hpp"
#include "hirz/series.hpp"

namespace hirz {

/// Graded pieces Gr^p_F of a good variation (or of its Deligne extension), as bundles.
struct VariationData {
  RingPtr ring;
  std::vector<std::pair<int, BundleClass>> pieces;

  /// Q(0): a single trivial line bundle in degree 0.
  static VariationData trivial(const RingPtr& ring);
  /// Q(-m): a single trivial line bundle in degree m.
  static VariationData tate(const RingPtr& ring, int m);
};

/// sum_p [piece_p] (-y)^p
KPolyClass mhc_cohomological(const VariationData& data);

enum class Support { Closed, OpenComplement };

/// Closed: lambda_y(T*M). OpenComplement: lambda_y(Omega^1(log D)); throws MissingLogStructure
/// when the model has no boundary. A supplied variation multiplies either one.
KPolyClass mhc_y(const SpaceModel& space, Support support = Support::Closed,
                 const std::optional<VariationData>& variation = std::nullopt);

/// Homology class graded by cycle dimension, stored through its Poincare dual
/// (the dimension-k part is the codimension dim-k part of the dual coordinates).
template <class R>
class Homology {
 public:
  Homology() = default;
  explicit Homology(Cohomology<R> dual) : dual_(std::move(dual)) {}

  const RingPtr& ring() const { return dual_.ring(); }
  int dim() const { return dual_.ring()->dim(); }
  const Cohomology<R>& dual() const { return dual_; }
  /// Dimension-k part, still in dual coordinates.
  Cohomology<R> component(int k) const { return dual_.component(dim() - k); }
  bool is_zero() const { return dual_.is_zero(); }

  template <class F>
  auto transform(F f) const {
    using T = decltype(f(std::declval<const R&>()));
    return Homology<T>(dual_.transform(f));
  }

  Homology& operator+=(const Homology& o) {
    dual_ += o.dual_;
    return *this;
  }
  Homology& operator-=(const Homology& o) {
    dual_ -= o.dual_;
    return *this;
  }
  friend Homology operator+(Homology a, const Homology& b) { return a += b; }
  friend Homology operator-(Homology a, const Homology& b) { return a -= b; }
  Homology scaled(const R& s) const { return Homology(dual_.scaled(s)); }
  friend bool operator==(const Homology& a, const Homology& b) { return a.dual_ == b.dual_; }

 private:
  Cohomology<R> dual_;
};

using HomClassY = Homology<RationalFunctionY>;
using HomClassQ = Homology<Rational>;

/// Fundamental class [M].
HomClassQ fundamental_class(const SpaceModel& space);

/// td_*(k) = ch(k) td(TM) cap [M]; normalized additionally divides the dimension-k part by
/// (1+y)^k. `todd` overrides the per-root Todd series (defaults to the exact one).
HomClassY mht(const KPolyClass& k, const SpaceModel& space, bool normalized,
              const std::optional<ChernRootSeries>& todd = std::nullopt);

/// Dimension-0 component pushed to a point.
RationalFunctionY degree(const HomClassY& c);
Rational degree(const HomClassQ& c);

KPolyClass exterior(const KPolyClass& a, const KPolyClass& b);
HomClassY exterior(const HomClassY& a, const HomClassY& b);

/// Gysin pushforward of cycles.
HomClassY pushforward(const SpaceMap& f, const HomClassY& c);
HomClassQ pushforward(const SpaceMap& f, const HomClassQ& c);
/// K-theoretic pushforward via Grothendieck-Riemann-Roch:
/// ch(f_! k) = f_*(ch(k) td(T_src)) / td(T_tgt).
KPolyClass pushforward(const SpaceMap& f, const KPolyClass& k);

/// lambda_y(T_g^*) g^*(c) for smooth built-in maps; throws UnsupportedMap otherwise.
KPolyClass pullback_smooth(const SpaceMap& g, const KPolyClass& c);

/// Sign (-1)^k on the dimension-k part and y -> 1/y.
HomClassY homology_dual(const HomClassY& c);

/// Cancels (1+y) denominators and evaluates at y = -1; throws NotPolynomial on a pole.
HomClassQ specialize_minus_one(const HomClassY& c);

/// c_*(1_U) for U = P^n minus k hyperplanes in general position, by inclusion-exclusion
/// over the linear strata.
HomClassQ csm_arrangement(int n, int k);

/// "[P2] + 3*l + 3*[pt]" on projective models, "[M] + c*[h*xi]" elsewhere.
std::string render(const HomClassQ& c, const SpaceModel& space);
std::string render(const HomClassY& c, const SpaceModel& space);
/// Components of a KPolyClass's Chern character, "1 + (-2*y)*h" style.
std::string render(const CohClassY& c);
std::string render(const CohClassF& c);
std::string render(const CohClass& c);

}  // namespace hirz
