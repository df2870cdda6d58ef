#include "hirz/kclass.hpp"

#include "hirz/error.hpp"

namespace hirz {

namespace {

LaurentY degree_zero_part(const CohClassY& ch) {
  LaurentY r;
  for (std::size_t i = 0; i < ch.size(); ++i)
    if (ch.ring()->degree(i) == 0) r += ch[i];
  return r;
}

}  // namespace

KPolyClass::KPolyClass(CohClassY ch) : rank_(degree_zero_part(ch)), ch_(std::move(ch)) {}

KPolyClass KPolyClass::of_bundle(const BundleClass& v) { return KPolyClass(lift<LaurentY>(chern_character(v))); }

KPolyClass KPolyClass::unit(const RingPtr& ring) { return KPolyClass(CohClassY::unit(ring)); }

KPolyClass& KPolyClass::operator+=(const KPolyClass& o) {
  ch_ += o.ch_;
  rank_ += o.rank_;
  return *this;
}

KPolyClass& KPolyClass::operator-=(const KPolyClass& o) {
  ch_ -= o.ch_;
  rank_ -= o.rank_;
  return *this;
}

KPolyClass lambda_y(const BundleClass& v) {
  const RingPtr& ring = v.ring();
  const int dim = ring->dim();
  const auto p = power_sums(v);
  // P_k = sum_j e^{k a_j} = rank + sum_m k^m p_m / m!
  std::vector<CohClass> big_p(static_cast<std::size_t>(v.rank) + 1, CohClass(ring));
  for (int k = 1; k <= v.rank; ++k) {
    CohClass s = p[0];
    for (int m = 1; m <= dim; ++m)
      s += p[static_cast<std::size_t>(m)].scaled(pow(Rational(k), m) / Rational(factorial(m)));
    big_p[static_cast<std::size_t>(k)] = std::move(s);
  }
  // e_i = (1/i) sum_{j=1}^i (-1)^{j-1} e_{i-j} P_j
  std::vector<CohClass> e;
  e.push_back(CohClass::unit(ring));
  for (int i = 1; i <= v.rank; ++i) {
    CohClass s(ring);
    for (int j = 1; j <= i; ++j) {
      CohClass t = e[static_cast<std::size_t>(i - j)] * big_p[static_cast<std::size_t>(j)];
      if (j % 2 == 1) s += t;
      else s -= t;
    }
    e.push_back(s.scaled(Rational(1, i)));
  }
  CohClassY ch(ring);
  for (int i = 0; i <= v.rank; ++i) ch += lift<LaurentY>(e[static_cast<std::size_t>(i)]).scaled(LaurentY::y(i));
  return KPolyClass(std::move(ch));
}

CohClassY invert_y(const CohClassY& c) {
  return c.transform([](const LaurentY& x) { return x.inverted(); });
}

KPolyClass k_dual(const KPolyClass& k, const SpaceModel& space) {
  if (!same_ring(k.ring(), space.ring())) throw InvalidParameter("class does not live on " + space.key());
  const RingPtr& ring = space.ring();
  CohClassY negated = k.ch();
  for (std::size_t i = 0; i < negated.size(); ++i)
    if (ring->degree(i) % 2 == 1) negated[i] = -negated[i];
  const CohClass c1 = space.tangent_chern().component(1);
  const CohClassY omega = lift<LaurentY>(exp_nilpotent(-c1));
  CohClassY dualized = negated * omega;
  if (space.dim() % 2 == 1) dualized = -dualized;
  return KPolyClass(invert_y(dualized));
}

}  // namespace hirz
