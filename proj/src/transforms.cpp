#include "hirz/transforms.hpp"

#include "hirz/bundle.hpp"
#include "hirz/error.hpp"
#include "hirz/poly_text.hpp"

namespace hirz {

namespace {

LaurentY minus_y_power(int p) {
  LaurentY m = LaurentY::y(p);
  return p % 2 == 0 ? m : -m;
}

CohClass todd_class(const SpaceModel& space, const std::optional<ChernRootSeries>& todd) {
  const ChernRootSeries s = todd ? *todd : genus_series(SeriesKind::Todd, std::max(space.dim(), 1));
  return apply_series(s, space.tangent_bundle()).transform([](const LaurentY& x) {
    if (!x.is_constant()) throw InvalidParameter("todd series must have constant coefficients");
    return x.coefficient(0);
  });
}

template <class R>
Homology<R> homology_pushforward(const SpaceMap& f, const Homology<R>& c) {
  if (!f.is_proper()) throw UnsupportedMap(f.name() + " is not proper");
  return Homology<R>(gysin_pushforward(f, c.dual()));
}

}  // namespace

VariationData VariationData::trivial(const RingPtr& ring) { return tate(ring, 0); }

VariationData VariationData::tate(const RingPtr& ring, int m) {
  VariationData d{ring, {}};
  d.pieces.emplace_back(m, trivial_bundle(ring, 1));
  return d;
}

KPolyClass mhc_cohomological(const VariationData& data) {
  KPolyClass sum(CohClassY(data.ring));
  for (const auto& [p, piece] : data.pieces) {
    if (!same_ring(piece.ring(), data.ring)) throw InvalidParameter("variation pieces live on different spaces");
    sum += minus_y_power(p) * KPolyClass::of_bundle(piece);
  }
  return sum;
}

KPolyClass mhc_y(const SpaceModel& space, Support support, const std::optional<VariationData>& variation) {
  KPolyClass base = KPolyClass::unit(space.ring());
  if (support == Support::Closed) {
    base = lambda_y(space.cotangent_bundle());
  } else {
    const auto& log = space.log_structure();
    if (!log) throw MissingLogStructure(space.key() + " has no boundary divisor");
    base = lambda_y(log->log_cotangent);
  }
  if (!variation) return base;
  if (!same_ring(variation->ring, space.ring())) throw InvalidParameter("variation does not live on " + space.key());
  return mhc_cohomological(*variation) * base;
}

HomClassQ fundamental_class(const SpaceModel& space) { return HomClassQ(CohClass::unit(space.ring())); }

HomClassY mht(const KPolyClass& k, const SpaceModel& space, bool normalized,
              const std::optional<ChernRootSeries>& todd) {
  if (!same_ring(k.ring(), space.ring())) throw InvalidParameter("class does not live on " + space.key());
  const CohClassY dual = k.ch() * lift<LaurentY>(todd_class(space, todd));
  CohClassF out = lift<RationalFunctionY>(dual);
  if (normalized) {
    const RingPtr& ring = space.ring();
    for (std::size_t i = 0; i < out.size(); ++i) {
      const int cycle_dim = space.dim() - ring->degree(i);
      out[i] *= RationalFunctionY(LaurentY(1), cycle_dim);
    }
  }
  return HomClassY(std::move(out));
}

RationalFunctionY degree(const HomClassY& c) { return integrate(c.dual()); }
Rational degree(const HomClassQ& c) { return integrate(c.dual()); }

KPolyClass exterior(const KPolyClass& a, const KPolyClass& b) { return KPolyClass(exterior(a.ch(), b.ch())); }
HomClassY exterior(const HomClassY& a, const HomClassY& b) { return HomClassY(exterior(a.dual(), b.dual())); }

HomClassY pushforward(const SpaceMap& f, const HomClassY& c) { return homology_pushforward(f, c); }
HomClassQ pushforward(const SpaceMap& f, const HomClassQ& c) { return homology_pushforward(f, c); }

KPolyClass pushforward(const SpaceMap& f, const KPolyClass& k) {
  if (!f.is_proper()) throw UnsupportedMap(f.name() + " is not proper");
  const CohClassY td_src = lift<LaurentY>(todd_class(*f.source(), std::nullopt));
  const CohClassY td_tgt_inv = lift<LaurentY>(inverse_unipotent(todd_class(*f.target(), std::nullopt)));
  return KPolyClass(gysin_pushforward(f, k.ch() * td_src) * td_tgt_inv);
}

KPolyClass pullback_smooth(const SpaceMap& g, const KPolyClass& c) {
  if (!g.is_smooth()) throw UnsupportedMap(g.name() + " is not smooth");
  const KPolyClass lambda = lambda_y(dual_bundle(relative_tangent(g)));
  return lambda * KPolyClass(pullback(g, c.ch()));
}

HomClassY homology_dual(const HomClassY& c) {
  CohClassF out = c.dual();
  const RingPtr& ring = c.ring();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int cycle_dim = c.dim() - ring->degree(i);
    out[i] = cycle_dim % 2 == 0 ? out[i].inverted() : -out[i].inverted();
  }
  return HomClassY(std::move(out));
}

HomClassQ specialize_minus_one(const HomClassY& c) {
  return c.transform([](const RationalFunctionY& q) { return reduce_unit_denominator(q).evaluate(Rational(-1)); });
}

HomClassQ csm_arrangement(int n, int k) {
  if (n < 1 || k < 0 || k > n + 1) throw InvalidParameter("arrangement needs n >= 1 and 0 <= k <= n+1");
  const RingPtr ring = make_arrangement(n, k)->ring();
  CohClass out(ring);
  // A stratum of codimension j is a P^m with m = n - j, hit by C(k, j) intersections.
  for (int j = 0; j <= std::min(k, n); ++j) {
    const int m = n - j;
    const Rational weight = (j % 2 == 0 ? Rational(1) : Rational(-1)) * Rational(binomial(k, j));
    for (int i = 0; i <= m; ++i) out[static_cast<std::size_t>(j + i)] += weight * Rational(binomial(m + 1, i));
  }
  return HomClassQ(std::move(out));
}

namespace {

std::string cycle_label(const SpaceModel& space, std::size_t i) {
  const int n = space.dim();
  const int cycle_dim = n - space.ring()->degree(i);
  if (space.kind() == SpaceModel::Kind::Projective) {
    if (cycle_dim == 0) return "[pt]";
    if (cycle_dim == 1 && n > 1) return "l";
    return "[P" + std::to_string(cycle_dim) + "]";
  }
  if (i == 0) return "[M]";
  return "[" + space.ring()->label(i) + "]";
}

bool is_simple(const std::string& s) { return s.find(' ') == std::string::npos; }

std::string join_terms(const std::vector<std::pair<std::string, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [coef, label] : terms) {
    std::string c = is_simple(coef) ? coef : "(" + coef + ")";
    std::string piece;
    if (label.empty()) piece = c;
    else if (coef == "1") piece = label;
    else if (coef == "-1") piece = "-" + label;
    else piece = c + "*" + label;
    if (out.empty()) out = piece;
    else if (piece[0] == '-') out += " - " + piece.substr(1);
    else out += " + " + piece;
  }
  return out;
}

template <class R, class F>
std::string render_cycles(const Homology<R>& c, const SpaceModel& space, F coef_text) {
  if (!same_ring(c.ring(), space.ring())) throw InvalidParameter("class does not live on " + space.key());
  if (c.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.dual().size(); ++i) {
    if (c.dual()[i].is_zero()) continue;
    const std::string coef = coef_text(c.dual()[i]);
    const std::string label = cycle_label(space, i);
    // Only the fundamental class drops a unit coefficient.
    std::string piece;
    if (i == 0 && coef == "1") piece = label;
    else piece = (is_simple(coef) ? coef : "(" + coef + ")") + "*" + label;
    if (out.empty()) out = piece;
    else if (piece[0] == '-') out += " - " + piece.substr(1);
    else out += " + " + piece;
  }
  return out;
}

template <class R, class F>
std::string render_cohomology(const Cohomology<R>& c, F coef_text) {
  std::vector<std::pair<std::string, std::string>> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    terms.emplace_back(coef_text(c[i]), i == 0 ? std::string() : c.ring()->label(i));
  }
  return join_terms(terms);
}

}  // namespace

std::string render(const HomClassQ& c, const SpaceModel& space) {
  return render_cycles(c, space, [](const Rational& q) { return q.to_string(); });
}

std::string render(const HomClassY& c, const SpaceModel& space) {
  return render_cycles(c, space, [](const RationalFunctionY& q) { return hirz::render(q); });
}

std::string render(const CohClassY& c) {
  return render_cohomology(c, [](const LaurentY& q) { return hirz::render(q); });
}

std::string render(const CohClassF& c) {
  return render_cohomology(c, [](const RationalFunctionY& q) { return hirz::render(q); });
}

std::string render(const CohClass& c) {
  return render_cohomology(c, [](const Rational& q) { return q.to_string(); });
}

}  // namespace hirz
