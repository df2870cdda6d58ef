#include <doctest.h>

#include <random>

#include "hirz/bundle.hpp"
#include "hirz/error.hpp"
#include "hirz/kclass.hpp"
#include "support.hpp"

using namespace hirz;
using hirz::testing::Y;

namespace {

CohClass poly_in_h(const SpaceModel& s, std::vector<Rational> c) {
  CohClass out = CohClass(s.ring());
  CohClass hp = CohClass::unit(s.ring());
  for (const auto& x : c) {
    out += hp.scaled(x);
    hp = hp * s.hyperplane();
  }
  return out;
}

CohClassY poly_in_h_y(const SpaceModel& s, std::vector<LaurentY> c) {
  CohClassY out(s.ring());
  CohClassY hp = CohClassY::unit(s.ring());
  const CohClassY h = lift<LaurentY>(s.hyperplane());
  for (const auto& x : c) {
    out += hp.scaled(x);
    hp = hp * h;
  }
  return out;
}

/// Bernoulli numbers with B_1 = -1/2 from sum_{k=0}^{m} C(m+1,k) B_k = 0.
std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational s;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b.push_back(-s / Rational(m + 1));
  }
  return b;
}

/// x/(1-e^{-x}) = sum (-1)^j B_j x^j / j!
Rational todd_oracle(int j) {
  const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * bernoulli(j)[static_cast<std::size_t>(j)] / Rational(factorial(j));
}

/// x/tanh x = sum 2^{2k} B_{2k} x^{2k} / (2k)!
Rational l_oracle(int j) {
  if (j % 2 == 1) return Rational(0);
  return pow(Rational(2), j) * bernoulli(j)[static_cast<std::size_t>(j)] / Rational(factorial(j));
}

BundleClass line_sum(const SpaceModel& s, const std::vector<long>& degrees) {
  BundleClass v = line_bundle(s, degrees.at(0));
  for (std::size_t i = 1; i < degrees.size(); ++i) v = whitney_sum(v, line_bundle(s, degrees[i]));
  return v;
}

std::vector<SpacePtr> test_spaces() {
  return {make_projective(1), make_projective(2), make_projective(3), make_product(make_projective(1), make_projective(1)),
          make_projective_bundle(make_projective(1), std::vector<long>{0, 2}), make_hypersurface(3, 4)};
}

}  // namespace

TEST_CASE("bundle_combine examples") {
  auto p1 = make_projective(1);
  const BundleClass d = bundle_combine(BundleOp::Dual, line_bundle(*p1, 2));
  CHECK(d.rank == 1);
  CHECK(d.total_chern == poly_in_h(*p1, {1, -2}));

  auto p2 = make_projective(2);
  const BundleClass o1 = line_bundle(*p2, 1);
  const BundleClass euler = virtual_difference(
      bundle_combine(BundleOp::Sum, bundle_combine(BundleOp::Sum, o1, o1), o1), trivial_bundle(p2->ring(), 1));
  CHECK(euler.rank == 2);
  CHECK(euler.total_chern == poly_in_h(*p2, {1, 3, 3}));
  CHECK(euler == p2->tangent_bundle());

  auto p3 = make_projective(3);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      CHECK(bundle_combine(BundleOp::Tensor, line_bundle(*p3, a), line_bundle(*p3, b)) == line_bundle(*p3, a + b));

  CHECK_THROWS_AS(virtual_difference(o1, trivial_bundle(p2->ring(), 2)), InvalidParameter);
  CHECK_THROWS_AS(BundleClass(-1, CohClass::unit(p2->ring())), InvalidParameter);
}

TEST_CASE("tensor products follow the splitting principle") {
  auto p2 = make_projective(2);
  const std::vector<std::vector<long>> cases = {{0, 1}, {1, -2, 3}, {2}, {-1, -1}};
  for (const auto& a : cases)
    for (const auto& b : cases) {
      std::vector<long> pairwise;
      for (long x : a)
        for (long y : b) pairwise.push_back(x + y);
      CHECK(tensor_product(line_sum(*p2, a), line_sum(*p2, b)) == line_sum(*p2, pairwise));
    }
}

TEST_CASE("power sums round trip") {
  for (const auto& s : test_spaces()) {
    const BundleClass t = s->tangent_bundle();
    CHECK(bundle_from_power_sums(s->ring(), t.rank, power_sums(t)) == t);
    CHECK(chern_character(t).constant_term() == Rational(t.rank));
  }
  auto p2 = make_projective(2);
  // ch(O(1)) = 1 + h + h^2/2
  CHECK(chern_character(line_bundle(*p2, 1)) == poly_in_h(*p2, {1, 1, Rational(1, 2)}));
}

TEST_CASE("genus_series examples") {
  const ChernRootSeries todd = genus_series(SeriesKind::Todd, 2);
  CHECK(todd.coefficients == std::vector<LaurentY>{1, Rational(1, 2), Rational(1, 12)});
  const ChernRootSeries h = genus_series(SeriesKind::Hirzebruch, 1);
  CHECK(h[1] == Y("1/2 - 1/2*y"));
  CHECK(specialize(h, Rational(0))[1] == LaurentY(Rational(1, 2)));
  CHECK(specialize(h, Rational(-1))[1] == LaurentY(1));
  CHECK(specialize(h, Rational(1))[1] == LaurentY(0));
  const ChernRootSeries l = genus_series(SeriesKind::LClass, 2);
  CHECK(l.coefficients == std::vector<LaurentY>{1, 0, Rational(1, 3)});
  CHECK(genus_series(SeriesKind::Chern, 4).coefficients == std::vector<LaurentY>{1, 1, 0, 0, 0});
  CHECK_THROWS_AS(genus_series(SeriesKind::Todd, 0), InvalidParameter);
  CHECK(render(todd) == "1 + 1/2*x + 1/12*x^2");
}

TEST_CASE("genus series against Bernoulli numbers") {
  const int order = 12;
  const ChernRootSeries todd = genus_series(SeriesKind::Todd, order);
  const ChernRootSeries l = genus_series(SeriesKind::LClass, order);
  const ChernRootSeries h = genus_series(SeriesKind::Hirzebruch, order);
  for (int j = 0; j <= order; ++j) {
    CHECK(todd[static_cast<std::size_t>(j)] == LaurentY(todd_oracle(j)));
    CHECK(l[static_cast<std::size_t>(j)] == LaurentY(l_oracle(j)));
    // Q_y(x) = todd(x(1+y)) - xy
    LaurentY expected = todd_oracle(j) * one_plus_y().pow(static_cast<unsigned>(j));
    if (j == 1) expected -= LaurentY::y();
    CHECK(h[static_cast<std::size_t>(j)] == expected);
  }
}

TEST_CASE("apply_series examples") {
  auto p2 = make_projective(2);
  CHECK(apply_series(genus_series(SeriesKind::Chern, 2), p2->tangent_bundle()) == lift<LaurentY>(p2->tangent_chern()));
  const CohClassY td = apply_series(genus_series(SeriesKind::Todd, 2), p2->tangent_bundle());
  CHECK(td == lift<LaurentY>(poly_in_h(*p2, {1, Rational(3, 2), 1})));
  CHECK(integrate(td) == LaurentY(1));
  auto p1 = make_projective(1);
  CHECK(apply_series(genus_series(SeriesKind::Hirzebruch, 1), p1->tangent_bundle()) == poly_in_h_y(*p1, {1, Y("1 - y")}));
  CHECK_THROWS_AS(apply_series(genus_series(SeriesKind::Todd, 1), p2->tangent_bundle()), InvalidParameter);
}

TEST_CASE("apply_series is multiplicative over Whitney sums") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<long> deg(-3, 3);
  std::uniform_int_distribution<int> rank(1, 3);
  const SeriesKind kinds[] = {SeriesKind::Chern, SeriesKind::Todd, SeriesKind::LClass, SeriesKind::Hirzebruch};
  for (const auto& s : test_spaces()) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<long> a(static_cast<std::size_t>(rank(rng))), b(static_cast<std::size_t>(rank(rng)));
      for (auto& x : a) x = deg(rng);
      for (auto& x : b) x = deg(rng);
      const BundleClass v = line_sum(*s, a), w = line_sum(*s, b);
      for (SeriesKind k : kinds) {
        const ChernRootSeries f = genus_series(k, std::max(s->dim(), 1));
        CHECK(apply_series(f, whitney_sum(v, w)) == apply_series(f, v) * apply_series(f, w));
      }
      CHECK(lambda_y(whitney_sum(v, w)) == lambda_y(v) * lambda_y(w));
    }
  }
}

TEST_CASE("lambda_y examples") {
  auto p2 = make_projective(2);
  for (int n = 0; n <= 3; ++n) {
    const KPolyClass k = lambda_y(trivial_bundle(p2->ring(), n));
    CHECK(k.rank_poly() == one_plus_y().pow(static_cast<unsigned>(n)));
    CHECK(k.ch() == CohClassY::unit(p2->ring()).scaled(one_plus_y().pow(static_cast<unsigned>(n))));
  }
  auto p1 = make_projective(1);
  // [O] + y [O(-2)], ch = 1 + y e^{-2h}
  CHECK(lambda_y(p1->cotangent_bundle()).ch() == poly_in_h_y(*p1, {Y("1 + y"), Y("-2*y")}));
  auto arr = make_arrangement(2, 3);
  CHECK(lambda_y(arr->log_structure()->log_cotangent).ch() == CohClassY::unit(arr->ring()).scaled(Y("1 + 2*y + y^2")));
  // Lambda^2 of O(1) + O(2) on P2 is O(3)
  const KPolyClass l = lambda_y(line_sum(*p2, {1, 2}));
  CHECK(l.rank_poly() == Y("1 + 2*y + y^2"));
  const KPolyClass expected = KPolyClass::unit(p2->ring()) + LaurentY::y() * (KPolyClass::of_bundle(line_bundle(*p2, 1)) +
                                                                             KPolyClass::of_bundle(line_bundle(*p2, 2))) +
                              LaurentY::y(2) * KPolyClass::of_bundle(line_bundle(*p2, 3));
  CHECK(l == expected);
}

TEST_CASE("lambda_y has polynomial coefficients") {
  for (const auto& s : test_spaces()) {
    const KPolyClass k = lambda_y(s->cotangent_bundle());
    for (const auto& c : k.ch().coordinates()) CHECK((c.is_zero() || c.min_exponent() >= 0));
    CHECK(k.rank_poly() == one_plus_y().pow(static_cast<unsigned>(s->dim())));
  }
}

TEST_CASE("k_dual examples") {
  auto p1 = make_projective(1);
  const KPolyClass o = KPolyClass::unit(p1->ring());
  CHECK(k_dual(o, *p1) == LaurentY(-1) * KPolyClass::of_bundle(line_bundle(*p1, -2)));
  const KPolyClass c = lambda_y(p1->cotangent_bundle());
  CHECK(k_dual(c, *p1) == Y("-y^-1") * c);
  auto pt = make_point();
  const KPolyClass f = Y("2 - 3*y + y^4") * KPolyClass::unit(pt->ring());
  CHECK(k_dual(f, *pt) == Y("2 - 3*y^-1 + y^-4") * KPolyClass::unit(pt->ring()));
}

TEST_CASE("k_dual is an involution") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& s : test_spaces()) {
    for (int trial = 0; trial < 10; ++trial) {
      CohClassY ch(s->ring());
      for (std::size_t i = 0; i < ch.size(); ++i) ch[i] = testing::random_laurent(rng);
      const KPolyClass k(ch);
      CHECK(k_dual(k_dual(k, *s), *s) == k);
    }
  }
}
