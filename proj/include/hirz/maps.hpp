#pragma once

#include <string>

#include "hirz/space.hpp"

namespace hirz {

/// The built-in morphisms between space models.
class SpaceMap {
 public:
  enum class Kind {
    BundleProjection,       // P(E) -> base
    HypersurfaceInclusion,  // X -> P^n
    ProductProjection,      // A x B -> A or B
    LinearEmbedding,        // P^k -> P^n
    Constant,               // M -> pt
    Identity,
    OpenRestriction,        // compactification restricted to the open complement
  };

  static SpaceMap bundle_projection(SpacePtr total);
  static SpaceMap hypersurface_inclusion(SpacePtr hypersurface);
  /// factor 0 projects to the first factor, 1 to the second.
  static SpaceMap product_projection(SpacePtr product, int factor);
  static SpaceMap linear_embedding(int k, int n);
  static SpaceMap constant(SpacePtr source);
  static SpaceMap identity(SpacePtr space);
  static SpaceMap open_restriction(SpacePtr compactification);

  Kind kind() const { return kind_; }
  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  int factor() const { return factor_; }
  int relative_dimension() const { return source_->dim() - target_->dim(); }
  bool is_proper() const { return kind_ != Kind::OpenRestriction; }
  bool is_smooth() const;
  std::string name() const;

 private:
  SpaceMap(Kind kind, SpacePtr source, SpacePtr target, int factor = 0)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)), factor_(factor) {}

  Kind kind_;
  SpacePtr source_;
  SpacePtr target_;
  int factor_ = 0;
};

/// f_* on cohomology (Poincare-dual convention): lowers degree by the relative dimension.
/// Throws UnsupportedMap for maps that are not proper.
template <class R>
Cohomology<R> gysin_pushforward(const SpaceMap& f, const Cohomology<R>& c);

/// f^* on cohomology.
template <class R>
Cohomology<R> pullback(const SpaceMap& f, const Cohomology<R>& c);

/// T_f for smooth maps (rank = relative dimension). Throws UnsupportedMap otherwise.
BundleClass relative_tangent(const SpaceMap& f);

}  // namespace hirz
