#include "hirz/maps.hpp"

#include "hirz/error.hpp"

namespace hirz {

SpaceMap SpaceMap::bundle_projection(SpacePtr total) {
  if (total->kind() != SpaceModel::Kind::ProjectiveBundle)
    throw UnsupportedMap("bundle projection needs a projective bundle, got " + total->key());
  SpacePtr base = total->first();
  return SpaceMap(Kind::BundleProjection, std::move(total), std::move(base));
}

SpaceMap SpaceMap::hypersurface_inclusion(SpacePtr hypersurface) {
  if (hypersurface->kind() != SpaceModel::Kind::Hypersurface)
    throw UnsupportedMap("hypersurface inclusion needs a hypersurface, got " + hypersurface->key());
  SpacePtr ambient = make_projective(hypersurface->ambient_dimension());
  return SpaceMap(Kind::HypersurfaceInclusion, std::move(hypersurface), std::move(ambient));
}

SpaceMap SpaceMap::product_projection(SpacePtr product, int factor) {
  if (product->kind() != SpaceModel::Kind::Product)
    throw UnsupportedMap("product projection needs a product, got " + product->key());
  if (factor != 0 && factor != 1) throw InvalidParameter("product factor must be 0 or 1");
  SpacePtr target = factor == 0 ? product->first() : product->second();
  return SpaceMap(Kind::ProductProjection, std::move(product), std::move(target), factor);
}

SpaceMap SpaceMap::linear_embedding(int k, int n) {
  if (k < 0 || k > n) throw InvalidParameter("linear embedding needs 0 <= k <= n");
  return SpaceMap(Kind::LinearEmbedding, make_projective(k), make_projective(n));
}

SpaceMap SpaceMap::constant(SpacePtr source) { return SpaceMap(Kind::Constant, std::move(source), make_point()); }

SpaceMap SpaceMap::identity(SpacePtr space) {
  SpacePtr target = space;
  return SpaceMap(Kind::Identity, std::move(space), std::move(target));
}

SpaceMap SpaceMap::open_restriction(SpacePtr compactification) {
  if (!compactification->log_structure())
    throw MissingLogStructure("open restriction needs a boundary divisor on " + compactification->key());
  SpacePtr target = compactification;
  return SpaceMap(Kind::OpenRestriction, std::move(compactification), std::move(target));
}

bool SpaceMap::is_smooth() const {
  switch (kind_) {
    case Kind::BundleProjection:
    case Kind::ProductProjection:
    case Kind::Constant:
    case Kind::Identity:
    case Kind::OpenRestriction:
      return true;
    default:
      return false;
  }
}

std::string SpaceMap::name() const {
  switch (kind_) {
    case Kind::BundleProjection: return "bundle_projection(" + source_->key() + ")";
    case Kind::HypersurfaceInclusion: return "hypersurface_inclusion(" + source_->key() + ")";
    case Kind::ProductProjection:
      return "product_projection(" + source_->key() + "," + std::to_string(factor_) + ")";
    case Kind::LinearEmbedding: return "linear_embedding(" + source_->key() + "->" + target_->key() + ")";
    case Kind::Constant: return "constant(" + source_->key() + ")";
    case Kind::Identity: return "identity(" + source_->key() + ")";
    case Kind::OpenRestriction: return "open_restriction(" + source_->key() + ")";
  }
  return "?";
}

namespace {

void expect_ring(const RingPtr& ring, const SpacePtr& space, const char* role) {
  if (!same_ring(ring, space->ring()))
    throw InvalidParameter(std::string("class is not on the map's ") + role + " " + space->key());
}

}  // namespace

template <class R>
Cohomology<R> gysin_pushforward(const SpaceMap& f, const Cohomology<R>& c) {
  expect_ring(c.ring(), f.source(), "source");
  const RingPtr& target = f.target()->ring();
  Cohomology<R> out(target);
  switch (f.kind()) {
    case SpaceMap::Kind::BundleProjection: {
      const std::size_t n = target->size();
      const std::size_t top = static_cast<std::size_t>(f.source()->bundle()->rank - 1) * n;
      for (std::size_t i = 0; i < n; ++i) out[i] = c[top + i];
      return out;
    }
    case SpaceMap::Kind::HypersurfaceInclusion: {
      const Rational d(f.source()->hypersurface_degree());
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out[i + 1] = c[i] * d;
      return out;
    }
    case SpaceMap::Kind::ProductProjection: {
      const RingPtr& a = f.source()->first()->ring();
      const RingPtr& b = f.source()->second()->ring();
      const std::size_t nb = b->size();
      for (std::size_t i = 0; i < a->size(); ++i)
        for (std::size_t j = 0; j < nb; ++j) {
          const R& x = c[i * nb + j];
          if (x.is_zero()) continue;
          if (f.factor() == 0) {
            if (!b->integral(j).is_zero()) out[i] += x * b->integral(j);
          } else if (!a->integral(i).is_zero()) {
            out[j] += x * a->integral(i);
          }
        }
      return out;
    }
    case SpaceMap::Kind::LinearEmbedding: {
      const std::size_t shift = static_cast<std::size_t>(f.target()->dim() - f.source()->dim());
      for (std::size_t i = 0; i < c.size(); ++i) out[i + shift] = c[i];
      return out;
    }
    case SpaceMap::Kind::Constant:
      out[0] = integrate(c);
      return out;
    case SpaceMap::Kind::Identity:
      return c;
    case SpaceMap::Kind::OpenRestriction:
      break;
  }
  throw UnsupportedMap("no pushforward along " + f.name());
}

template <class R>
Cohomology<R> pullback(const SpaceMap& f, const Cohomology<R>& c) {
  expect_ring(c.ring(), f.target(), "target");
  const RingPtr& source = f.source()->ring();
  Cohomology<R> out(source);
  switch (f.kind()) {
    case SpaceMap::Kind::BundleProjection:
      for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i];
      return out;
    case SpaceMap::Kind::HypersurfaceInclusion:
    case SpaceMap::Kind::LinearEmbedding:
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[i];
      return out;
    case SpaceMap::Kind::ProductProjection: {
      const RingPtr& a = f.source()->first()->ring();
      const RingPtr& b = f.source()->second()->ring();
      return f.factor() == 0 ? exterior(c, Cohomology<R>::unit(b)) : exterior(Cohomology<R>::unit(a), c);
    }
    case SpaceMap::Kind::Constant:
      return Cohomology<R>::unit(source).scaled(c[0]);
    case SpaceMap::Kind::Identity:
    case SpaceMap::Kind::OpenRestriction:
      return c;
  }
  throw UnsupportedMap("no pullback along " + f.name());
}

BundleClass relative_tangent(const SpaceMap& f) {
  switch (f.kind()) {
    case SpaceMap::Kind::BundleProjection:
      return *f.source()->relative_tangent();
    case SpaceMap::Kind::ProductProjection: {
      const SpacePtr& other = f.factor() == 0 ? f.source()->second() : f.source()->first();
      const SpaceMap to_other = SpaceMap::product_projection(f.source(), 1 - f.factor());
      return BundleClass(other->dim(), pullback(to_other, other->tangent_chern()));
    }
    case SpaceMap::Kind::Constant:
      return f.source()->tangent_bundle();
    case SpaceMap::Kind::Identity:
    case SpaceMap::Kind::OpenRestriction:
      return trivial_bundle(f.source()->ring(), 0);
    default:
      break;
  }
  throw UnsupportedMap("map is not smooth: " + f.name());
}

template Cohomology<Rational> gysin_pushforward(const SpaceMap&, const Cohomology<Rational>&);
template Cohomology<LaurentY> gysin_pushforward(const SpaceMap&, const Cohomology<LaurentY>&);
template Cohomology<RationalFunctionY> gysin_pushforward(const SpaceMap&, const Cohomology<RationalFunctionY>&);
template Cohomology<Rational> pullback(const SpaceMap&, const Cohomology<Rational>&);
template Cohomology<LaurentY> pullback(const SpaceMap&, const Cohomology<LaurentY>&);
template Cohomology<RationalFunctionY> pullback(const SpaceMap&, const Cohomology<RationalFunctionY>&);

}  // namespace hirz
