#include <doctest.h>

#include <random>

#include "hirz/bundle.hpp"
#include "hirz/error.hpp"
#include "hirz/maps.hpp"
#include "hirz/space_text.hpp"
#include "hirz/transforms.hpp"
#include "support.hpp"

using namespace hirz;

namespace {

/// h^k on a model whose ring is a truncated polynomial ring in h.
CohClass h_power(const SpaceModel& s, int k) { return power(s.hyperplane(), static_cast<unsigned>(k)); }

CohClass xi_of(const SpaceModel& total) {
  Monomial m(total.ring()->generators().size(), 0);
  m.back() = 1;
  return CohClass::basis_element(total.ring(), *total.ring()->find(m));
}

CohClass from_coefficients(const RingPtr& ring, std::vector<long> c) {
  CohClass out(ring);
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = Rational(c[i]);
  return out;
}

std::vector<std::vector<long>> small_line_sums() {
  std::vector<std::vector<long>> out;
  for (long a = -2; a <= 2; ++a)
    for (long b = a; b <= 2; ++b) {
      out.push_back({a, b});
      for (long c = b; c <= 2; ++c) out.push_back({a, b, c});
    }
  return out;
}

}  // namespace

TEST_CASE("projective space") {
  auto p2 = make_projective(2);
  CHECK(p2->tangent_chern() == from_coefficients(p2->ring(), {1, 3, 3}));
  CHECK(integrate(h_power(*p2, 2)) == Rational(1));
  CHECK(integrate(h_power(*p2, 1)) == Rational(0));
  CHECK(p2->key() == "P2");
  CHECK(make_point()->is_point());
  CHECK_THROWS_AS(make_projective(-1), InvalidParameter);
}

TEST_CASE("hypersurface model") {
  auto x = make_hypersurface(3, 4);
  CHECK(x->dim() == 2);
  CHECK(x->tangent_chern() == from_coefficients(x->ring(), {1, 0, 6}));
  CHECK(integrate(x->tangent_chern().component(2)) == Rational(24));
  // cubic surface: Euler characteristic 9
  auto cubic = make_hypersurface(3, 3);
  CHECK(integrate(cubic->tangent_chern().component(2)) == Rational(9));
  // plane cubic: elliptic curve, Euler characteristic 0
  CHECK(integrate(make_hypersurface(2, 3)->tangent_chern().component(1)) == Rational(0));
  CHECK_THROWS_AS(make_hypersurface(1, 2), InvalidParameter);
  CHECK_THROWS_AS(make_hypersurface(3, 0), InvalidParameter);
}

TEST_CASE("arrangement log structures") {
  auto a = make_arrangement(2, 3);
  REQUIRE(a->log_structure());
  CHECK(a->log_structure()->log_cotangent.rank == 2);
  CHECK(a->log_structure()->log_cotangent.total_chern == CohClass::unit(a->ring()));
  for (int n = 1; n <= 4; ++n) {
    auto toric = make_arrangement(n, n + 1);
    CHECK(toric->log_structure()->log_cotangent.total_chern == CohClass::unit(toric->ring()));
    auto empty = make_arrangement(n, 0);
    CHECK(empty->log_structure()->log_cotangent == empty->cotangent_bundle());
    CHECK(toric->log_structure()->divisors.size() == static_cast<std::size_t>(n + 1));
  }
  CHECK_THROWS_AS(make_arrangement(2, 4), InvalidParameter);
  CHECK_THROWS_AS(make_arrangement(2, -1), InvalidParameter);
  CHECK_THROWS_AS(SpaceMap::open_restriction(make_projective(2)), MissingLogStructure);
}

TEST_CASE("projective bundle integration") {
  auto p1 = make_projective(1);
  auto total = make_projective_bundle(p1, std::vector<long>{0, 1});
  const CohClass xi = xi_of(*total);
  CHECK(integrate(xi * xi) == Rational(-1));
  CHECK(integrate(xi * total->hyperplane()) == Rational(1));
  CHECK(total->dim() == 2);
  CHECK_THROWS_AS(make_projective_bundle(p1, BundleClass(0, CohClass::unit(p1->ring()))), InvalidParameter);
  CHECK_THROWS_AS(make_projective_bundle(p1, std::vector<long>{}), InvalidParameter);
}

TEST_CASE("gysin pushforward examples") {
  auto p1 = make_projective(1);
  auto total = make_projective_bundle(p1, std::vector<long>{0, 1});
  const SpaceMap pi = SpaceMap::bundle_projection(total);
  CHECK(gysin_pushforward(pi, xi_of(*total)) == CohClass::unit(p1->ring()));

  auto quartic = make_hypersurface(3, 4);
  const SpaceMap iota = SpaceMap::hypersurface_inclusion(quartic);
  CHECK(gysin_pushforward(iota, CohClass::unit(quartic->ring())) == h_power(*iota.target(), 1).scaled(Rational(4)));

  const SpaceMap line = SpaceMap::linear_embedding(1, 2);
  CHECK(gysin_pushforward(line, h_power(*line.source(), 1)) == h_power(*line.target(), 2));
  CHECK(gysin_pushforward(line, CohClass::unit(line.source()->ring())) == h_power(*line.target(), 1));

  auto arr = make_arrangement(2, 1);
  CHECK_THROWS_AS(gysin_pushforward(SpaceMap::open_restriction(arr), CohClass::unit(arr->ring())), UnsupportedMap);
}

TEST_CASE("Segre classes from pushforward invert the Chern class") {
  for (int n : {1, 2}) {
    auto base = make_projective(n);
    for (const auto& degrees : small_line_sums()) {
      auto total = make_projective_bundle(base, degrees);
      const int r = static_cast<int>(degrees.size());
      const SpaceMap pi = SpaceMap::bundle_projection(total);
      const CohClass xi = xi_of(*total);
      CohClass segre(base->ring());
      for (int j = 0; j <= n; ++j) segre += gysin_pushforward(pi, power(xi, static_cast<unsigned>(r - 1 + j)));
      CHECK(segre == inverse_unipotent(total->bundle()->total_chern));
    }
  }
}

TEST_CASE("projective bundles keep the structure sheaf's Euler characteristic") {
  for (int n : {1, 2}) {
    auto base = make_projective(n);
    for (const auto& degrees : small_line_sums()) {
      auto total = make_projective_bundle(base, degrees);
      const auto todd = genus_series(SeriesKind::Todd, total->dim());
      CHECK(integrate(apply_series(todd, total->tangent_bundle())) == LaurentY(1));
    }
  }
}

TEST_CASE("projection formula") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_class = [&](const RingPtr& ring) {
    CohClass c(ring);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(coef(rng));
    return c;
  };
  std::vector<SpaceMap> maps = {
      SpaceMap::bundle_projection(make_projective_bundle(make_projective(2), std::vector<long>{0, 1, -1})),
      SpaceMap::bundle_projection(make_projective_bundle(make_projective(1), std::vector<long>{2, 3})),
      SpaceMap::hypersurface_inclusion(make_hypersurface(3, 4)),
      SpaceMap::product_projection(make_product(make_projective(1), make_projective(2)), 0),
      SpaceMap::product_projection(make_product(make_projective(1), make_projective(2)), 1),
      SpaceMap::linear_embedding(1, 3),
      SpaceMap::constant(make_projective(2)),
      SpaceMap::identity(make_projective(2)),
  };
  for (const auto& f : maps) {
    for (int trial = 0; trial < 10; ++trial) {
      const CohClass a = random_class(f.target()->ring());
      const CohClass b = random_class(f.source()->ring());
      CHECK_MESSAGE(gysin_pushforward(f, pullback(f, a) * b) == a * gysin_pushforward(f, b), f.name());
    }
  }
}

TEST_CASE("products") {
  auto p1 = make_projective(1);
  auto q = make_product(p1, p1);
  CHECK(q->key() == "P1xP1");
  CHECK(q->dim() == 2);
  CHECK(integrate(q->tangent_chern().component(2)) == Rational(4));
  CHECK(make_product(make_point(), p1)->key() == "P1");
  auto triple = make_product(q, make_projective(2));
  CHECK(triple->dim() == 4);
  CHECK(integrate(triple->tangent_chern().component(4)) == Rational(12));
}

TEST_CASE("space descriptions") {
  CHECK(parse_space("P3")->dim() == 3);
  CHECK(parse_space(" P1 x P1 ")->key() == "P1xP1");
  CHECK(parse_space("Proj(P1; 0, 1)")->key() == "Proj(P1;0,1)");
  CHECK(parse_space("Proj(P1xP1;0,-1,2)")->dim() == 4);
  CHECK(parse_space("Hyp(3,4)")->key() == "Hyp(3,4)");
  CHECK(parse_space("Arr(2,3)")->log_structure());
  CHECK(parse_space("(P1xP1)xP1")->dim() == 3);
  CHECK_THROWS_AS(parse_space("Arr(2,5)"), InvalidParameter);
  try {
    (void)parse_space("Proj(P1;)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_space("Q2"), ParseError);
  CHECK_THROWS_AS(parse_space("P2x"), ParseError);
  CHECK_THROWS_AS(parse_space("P2 P1"), ParseError);
}

TEST_CASE("custom presentations") {
  const char* doc = R"(# P1 x P1 written out by hand
name Quadric
dim 2
gen a 1
gen b 1
rel a^2 = 0
rel b^2 = 0
int a*b = 1
chern 1 + 2*a + 2*b + 4*a*b
hyperplane a + b
)";
  auto q = make_custom(parse_space_document(doc));
  auto builtin = make_product(make_projective(1), make_projective(1));
  CHECK(q->key() == "Quadric");
  CHECK(q->ring()->size() == 4);
  CHECK(integrate(q->tangent_chern().component(2)) == Rational(4));
  CHECK(integrate(power(q->hyperplane(), 2)) == Rational(2));
  CHECK(degree(mht(mhc_y(*q), *q, false)) == degree(mht(mhc_y(*builtin), *builtin, false)));

  // P2 through a single generator, with a log structure of three lines
  const char* p2 = "name Plane\ndim 2\ngen h 1\nrel h^3 = 0\nint h^2 = 1\nchern 1 + 3*h + 3*h^2\n"
                   "logcotangent 2 1\ndivisor h\ndivisor h\ndivisor h\n";
  auto plane = make_custom(parse_space_document(p2));
  CHECK(plane->log_structure()->divisors.size() == 3);
  CHECK(degree(mht(mhc_y(*plane, Support::OpenComplement), *plane, false)) == RationalFunctionY(testing::Y("1 + 2*y + y^2")));

}

TEST_CASE("custom presentation errors") {
  CHECK_THROWS_AS(make_custom(parse_space_document("dim 1\ngen h 1\nrel h^2 = h\nint h = 1\nchern 1\n")),
                  InvalidParameter);
  CHECK_THROWS_AS(make_custom(parse_space_document("dim 1\ngen h 1\nrel h^2 = 0\nchern 1\n")), InvalidParameter);
  CHECK_THROWS_AS(parse_space_document("dim 1\ngen h 1\nint k = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_space_document("dim x\n"), ParseError);
  CHECK_THROWS_AS(parse_space_document("gen h 1\n"), ParseError);
  CHECK_THROWS_AS(parse_space_document("dim 1\nfoo bar\n"), ParseError);
  try {
    (void)parse_space_document("dim 1\ngen h 1\nchern 1 + \n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 25);  // end of the chern line
  }
}
