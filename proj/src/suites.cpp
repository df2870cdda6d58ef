#include "hirz/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "hirz/bundle.hpp"
#include "hirz/error.hpp"
#include "hirz/motivic.hpp"
#include "hirz/poly_text.hpp"
#include "hirz/transforms.hpp"

namespace hirz {

bool SuiteResult::pass() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

std::string text(const Rational& x) { return x.to_string(); }
std::string text(const LaurentY& x) { return render(x); }
std::string text(const RationalFunctionY& x) { return render(x); }
std::string text(const PolyUV& x) { return render(x); }
std::string text(const KPolyClass& x) { return "ch = " + render(x.ch()); }
std::string text(const HomClassQ& x) { return render(x.dual()); }
std::string text(const HomClassY& x) { return render(x.dual()); }

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <class T>
  void equal(std::string identity, const T& lhs, const T& rhs) {
    const bool ok = lhs == rhs;
    result_.checks.push_back({std::move(identity), ok, ok ? "" : "lhs = " + text(lhs) + "; rhs = " + text(rhs)});
  }

  void record(std::string identity, bool ok, std::string detail) {
    result_.checks.push_back({std::move(identity), ok, ok ? "" : std::move(detail)});
  }

  /// Runs `body`; a library error becomes a failed check carrying its message.
  template <class F>
  void attempt(const std::string& identity, F body) {
    try {
      body();
    } catch (const Error& e) {
      result_.checks.push_back({identity, false, e.what()});
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

LaurentY alternating_sum(int n) {
  LaurentY s;
  for (int p = 0; p <= n; ++p) s += LaurentY::monomial(Rational(p % 2 == 0 ? 1 : -1), p);
  return s;
}

LaurentY minus_y_power(int m) { return LaurentY::monomial(Rational(m % 2 == 0 ? 1 : -1), m); }

/// chi_y(P^n) from the Hodge realization of the motivic class, independent of any series.
LaurentY motivic_chi_projective(int n) { return chi_c_y(motivic_atom(AtomKind::Projective, n)); }

std::string proj_name(int n) { return "P" + std::to_string(n); }

struct BundleCase {
  SpacePtr base;
  std::vector<long> degrees;
};

/// Sums of one to three line bundles O(a) with |a| <= 3 over P1 and P2.
std::vector<BundleCase> bundle_family() {
  std::vector<BundleCase> out;
  for (int n : {1, 2}) {
    SpacePtr base = make_projective(n);
    for (long a = -3; a <= 3; ++a) {
      out.push_back({base, {a}});
      for (long b = a; b <= 3; ++b) {
        out.push_back({base, {a, b}});
        for (long c = b; c <= 3; ++c) out.push_back({base, {a, b, c}});
      }
    }
  }
  return out;
}

int series_order(const SuiteOptions& o, int dim) { return std::max({o.order, dim, 1}); }

ChernRootSeries todd_for(const SuiteOptions& o, int dim) { return o.series(SeriesKind::Todd, series_order(o, dim)); }

/// chi_y(M) = integral of T_y^*(TM).
LaurentY hirzebruch_genus(const SuiteOptions& o, const SpaceModel& m) {
  return integrate(apply_series(o.series(SeriesKind::Hirzebruch, series_order(o, m.dim())), m.tangent_bundle()));
}

RationalFunctionY mht_genus(const SuiteOptions& o, const SpaceModel& m, Support support) {
  return degree(mht(mhc_y(m, support), m, false, todd_for(o, m.dim())));
}

MotivicClass torus_power(int n) {
  MotivicClass t = motivic_atom(AtomKind::Torus);
  for (int i = 1; i < n; ++i) t = t * motivic_atom(AtomKind::Torus);
  return t;
}

SuiteResult suite_ghrr(const SuiteOptions& o) {
  Recorder r("ghrr");
  for (int n = 1; n <= 4; ++n) {
    const std::string id = "chi_y(" + proj_name(n) + ")";
    r.attempt(id, [&] {
      auto p = make_projective(n);
      const LaurentY chi = hirzebruch_genus(o, *p);
      r.equal("integral T_y(T" + proj_name(n) + ") = sum_p (-y)^p", chi, alternating_sum(n));
      r.equal("degree MHT_y(" + proj_name(n) + ") = sum_p (-y)^p", mht_genus(o, *p, Support::Closed),
              RationalFunctionY(alternating_sum(n)));
      r.equal(id + " at y=-1 = " + std::to_string(n + 1), chi.evaluate(Rational(-1)), Rational(n + 1));
      r.equal(id + " at y=0 = 1", chi.evaluate(Rational(0)), Rational(1));
      r.equal(id + " at y=1 = " + std::to_string(n % 2 == 0 ? 1 : 0), chi.evaluate(Rational(1)),
              Rational(n % 2 == 0 ? 1 : 0));
    });
  }
  r.attempt("quartic", [&] {
    auto x = make_hypersurface(3, 4);
    const LaurentY chi = hirzebruch_genus(o, *x);
    r.equal("chi_y(Hyp(3,4)) = 2 - 20*y + 2*y^2", chi, parse_laurent_y("2 - 20*y + 2*y^2"));
    r.equal("degree MHT_y(Hyp(3,4)) = 2 - 20*y + 2*y^2", mht_genus(o, *x, Support::Closed),
            RationalFunctionY(parse_laurent_y("2 - 20*y + 2*y^2")));
    r.equal("chi_-1(Hyp(3,4)) = 24", chi.evaluate(Rational(-1)), Rational(24));
    r.equal("chi_1(Hyp(3,4)) = -16", chi.evaluate(Rational(1)), Rational(-16));
  });
  r.attempt("elliptic curve", [&] {
    const MotivicClass c1 = motivic_atom(AtomKind::Curve, 1);
    r.equal("E(C1) = (1 - u)*(1 - v)", e_polynomial(c1), (PolyUV(1) - PolyUV::u()) * (PolyUV(1) - PolyUV::v()));
    r.equal("chi_y(C1) = 0", chi_c_y(c1), LaurentY());
  });
  return r.take();
}

std::string first_mismatch(const ChernRootSeries& a, const ChernRootSeries& b) {
  for (int j = 0; j <= std::min(a.order, b.order); ++j)
    if (!(a[j] == b[j]))
      return "x^" + std::to_string(j) + ": " + render(a[j]) + " vs " + render(b[j]);
  return "orders differ";
}

SuiteResult suite_series_limits(const SuiteOptions& o) {
  Recorder r("series-limits");
  const int order = o.order;
  const std::string suffix = " to order " + std::to_string(order);
  r.attempt("series", [&] {
    if (order < 1) throw InvalidParameter("order must be at least 1");
    const ChernRootSeries h = o.series(SeriesKind::Hirzebruch, order);
    const std::pair<int, SeriesKind> limits[] = {
        {-1, SeriesKind::Chern}, {0, SeriesKind::Todd}, {1, SeriesKind::LClass}};
    for (const auto& [y, kind] : limits) {
      const ChernRootSeries lhs = specialize(h, Rational(y));
      const ChernRootSeries rhs = o.series(kind, order);
      const bool ok = lhs.order == rhs.order && lhs.coefficients == rhs.coefficients;
      r.record("hirzebruch at y=" + std::to_string(y) + " = " + to_string(kind) + suffix, ok, first_mismatch(lhs, rhs));
    }
  });
  return r.take();
}

std::string bundle_name(const BundleCase& c) {
  std::string s = "Proj(" + c.base->key() + ";";
  for (std::size_t i = 0; i < c.degrees.size(); ++i) s += (i ? "," : "") + std::to_string(c.degrees[i]);
  return s + ")";
}

SuiteResult suite_multiplicativity(const SuiteOptions& o) {
  Recorder r("multiplicativity");
  for (const auto& c : bundle_family()) {
    const std::string name = bundle_name(c);
    r.attempt(name, [&] {
      auto total = make_projective_bundle(c.base, c.degrees);
      const int rank = static_cast<int>(c.degrees.size());
      const LaurentY expected = motivic_chi_projective(rank - 1) * motivic_chi_projective(c.base->dim());
      r.equal("chi_y(" + name + ") = chi_y(P" + std::to_string(rank - 1) + ") * chi_y(" + c.base->key() + ")",
              mht_genus(o, *total, Support::Closed), RationalFunctionY(expected));
    });
  }
  return r.take();
}

SuiteResult suite_updown(const SuiteOptions&) {
  Recorder r("updown");
  for (const auto& c : bundle_family()) {
    const std::string name = bundle_name(c);
    r.attempt(name, [&] {
      auto total = make_projective_bundle(c.base, c.degrees);
      const SpaceMap pi = SpaceMap::bundle_projection(total);
      const int rank = static_cast<int>(c.degrees.size());
      r.equal("pi_* MHC_y(" + name + ") = chi_y(P" + std::to_string(rank - 1) + ") * MHC_y(" + c.base->key() + ")",
              pushforward(pi, mhc_y(*total)), alternating_sum(rank - 1) * mhc_y(*c.base));
    });
  }
  return r.take();
}

SuiteResult suite_vrr(const SuiteOptions&) {
  Recorder r("vrr");
  auto vrr = [&r](const SpaceMap& g) {
    r.attempt(g.name(), [&] {
      r.equal("lambda_y(T*_g) g^* MHC_y(" + g.target()->key() + ") = MHC_y(" + g.source()->key() + ") for " + g.name(),
              pullback_smooth(g, mhc_y(*g.target())), mhc_y(*g.source()));
    });
  };
  const std::pair<int, int> products[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (const auto& [a, b] : products) {
    auto prod = make_product(make_projective(a), make_projective(b));
    vrr(SpaceMap::product_projection(prod, 0));
    vrr(SpaceMap::product_projection(prod, 1));
  }
  for (const auto& c : bundle_family()) vrr(SpaceMap::bundle_projection(make_projective_bundle(c.base, c.degrees)));
  for (int n = 1; n <= 3; ++n) vrr(SpaceMap::constant(make_projective(n)));
  vrr(SpaceMap::identity(make_projective(2)));
  r.attempt("open restriction", [&] {
    auto arr = make_arrangement(2, 2);
    const KPolyClass c = mhc_y(*arr, Support::OpenComplement);
    r.equal("restriction to the complement of Arr(2,2) leaves MHC_y unchanged",
            pullback_smooth(SpaceMap::open_restriction(arr), c), c);
  });
  return r.take();
}

HodgeDiamond random_diamond(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 6), index(-3, 3), value(-4, 4);
  HodgeDiamond::Entries e;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int p = index(rng);
    const int q = index(rng);
    e[{p, q}] += value(rng);
  }
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return HodgeDiamond(std::move(e));
}

SuiteResult suite_duality(const SuiteOptions& o) {
  Recorder r("duality");
  std::mt19937 rng(1729);
  for (int i = 0; i < 100; ++i) {
    const HodgeDiamond v = random_diamond(rng);
    r.equal("chi_y(D V) = chi_{1/y}(V) for V = " + render_triples(v), chi_y(dual(v)), chi_y(v).inverted());
  }
  const SpacePtr spaces[] = {make_projective(1), make_projective(2), make_product(make_projective(1), make_projective(1))};
  for (const auto& m : spaces) {
    r.attempt(m->key(), [&] {
      const KPolyClass c = mhc_y(*m);
      const KPolyClass dc = k_dual(c, *m);
      r.equal("D MHC_y(" + m->key() + ") = (-y)^-" + std::to_string(m->dim()) + " MHC_y(" + m->key() + ")", dc,
              minus_y_power(-m->dim()) * c);
      r.equal("D D MHC_y(" + m->key() + ") = MHC_y(" + m->key() + ")", k_dual(dc, *m), c);
      const auto todd = todd_for(o, m->dim());
      r.equal("D MHT~_y(" + m->key() + ") = MHT~_y(D MHC_y(" + m->key() + "))", homology_dual(mht(c, *m, false, todd)),
              mht(dc, *m, false, todd));
    });
  }
  return r.take();
}

SuiteResult suite_chern_limit(const SuiteOptions& o) {
  Recorder r("chern-limit");
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      const std::string key = "Arr(" + std::to_string(n) + "," + std::to_string(k) + ")";
      const std::string id = "MHT_y(" + key + ") at y=-1 = c_*(1_U)";
      r.attempt(id, [&] {
        auto arr = make_arrangement(n, k);
        const HomClassY t = mht(mhc_y(*arr, Support::OpenComplement), *arr, true, todd_for(o, n));
        r.equal(id, specialize_minus_one(t), csm_arrangement(n, k));
      });
    }
  }
  return r.take();
}

/// chi_y(U) of an open complement via the logarithmic pairing.
LaurentY log_genus(const SuiteOptions& o, const SpaceModel& arr) {
  return reduce_unit_denominator(mht_genus(o, arr, Support::OpenComplement));
}

SuiteResult suite_arrangements(const SuiteOptions& o) {
  Recorder r("arrangements");
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      const std::string key = "Arr(" + std::to_string(n) + "," + std::to_string(k) + ")";
      r.attempt(key, [&] {
        const LaurentY chi = log_genus(o, *make_arrangement(n, k));
        const LaurentY chi_c = chi_c_y(motivic_arrangement_complement(n, k));
        r.equal("chi^c_y(" + key + ") = (-y)^" + std::to_string(n) + " chi_{1/y}(" + key + ")", chi_c,
                minus_y_power(n) * chi.inverted());
      });
    }
    const std::string torus = "Gm^" + std::to_string(n);
    r.attempt(torus, [&] {
      const LaurentY chi = log_genus(o, *make_arrangement(n, n + 1));
      r.equal("chi^c_y(" + torus + ") = (-y)^" + std::to_string(n) + " chi_{1/y}(" + torus + ")",
              chi_c_y(torus_power(n)), minus_y_power(n) * chi.inverted());
    });
  }
  r.attempt("two lines", [&] {
    r.equal("chi^c_y(P2 - 2 lines) = y + y^2", chi_c_y(motivic_arrangement_complement(2, 2)), parse_laurent_y("y + y^2"));
    r.equal("chi_y(P2 - 2 lines) = 1 + y", log_genus(o, *make_arrangement(2, 2)), parse_laurent_y("1 + y"));
  });
  return r.take();
}

SuiteResult suite_integrality(const SuiteOptions& o) {
  Recorder r("integrality");
  auto gate = [&r](const std::string& what, const RationalFunctionY& q) {
    r.attempt(what, [&] {
      const LaurentY p = reduce_unit_denominator(q);
      const bool ok = p.has_integer_coefficients() && (p.is_zero() || p.min_exponent() >= 0);
      r.record(what + " in Z[y]", ok, render(q));
    });
  };
  for (int n = 1; n <= 4; ++n) {
    auto p = make_projective(n);
    gate("chi_y(" + p->key() + ")", RationalFunctionY(hirzebruch_genus(o, *p)));
    gate("degree MHT_y(" + p->key() + ")", mht_genus(o, *p, Support::Closed));
  }
  auto x = make_hypersurface(3, 4);
  gate("chi_y(Hyp(3,4))", RationalFunctionY(hirzebruch_genus(o, *x)));
  gate("degree MHT_y(Hyp(3,4))", mht_genus(o, *x, Support::Closed));
  for (const auto& c : bundle_family()) {
    r.attempt(bundle_name(c), [&] {
      auto total = make_projective_bundle(c.base, c.degrees);
      gate("chi_y(" + bundle_name(c) + ")", mht_genus(o, *total, Support::Closed));
    });
  }
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      auto arr = make_arrangement(n, k);
      gate("chi_y(" + arr->key() + ")", mht_genus(o, *arr, Support::OpenComplement));
      gate("chi^c_y(" + arr->key() + ")", RationalFunctionY(chi_c_y(motivic_arrangement_complement(n, k))));
    }
    gate("chi^c_y(Gm^" + std::to_string(n) + ")", RationalFunctionY(chi_c_y(torus_power(n))));
  }
  return r.take();
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"ghrr", suite_ghrr},
      {"series-limits", suite_series_limits},
      {"multiplicativity", suite_multiplicativity},
      {"vrr", suite_vrr},
      {"updown", suite_updown},
      {"duality", suite_duality},
      {"chern-limit", suite_chern_limit},
      {"arrangements", suite_arrangements},
      {"integrality", suite_integrality},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw InvalidParameter("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const SuiteOptions& options) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(fn(options));
  return out;
}

}  // namespace hirz
