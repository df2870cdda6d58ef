#include <doctest.h>

#include <random>

#include "hirz/error.hpp"
#include "hirz/hodge.hpp"
#include "support.hpp"

using namespace hirz;
using hirz::testing::UV;
using hirz::testing::Y;

namespace {

const HodgeDiamond elliptic_full({{{0, 0}, Integer(1)}, {{1, 0}, Integer(-1)}, {{0, 1}, Integer(-1)}, {{1, 1}, Integer(1)}});
const HodgeDiamond elliptic_h1({{{1, 0}, Integer(1)}, {{0, 1}, Integer(1)}});
const HodgeDiamond p2_diamond({{{0, 0}, Integer(1)}, {{1, 1}, Integer(1)}, {{2, 2}, Integer(1)}});

}  // namespace

TEST_CASE("tensor examples") {
  CHECK(tensor(HodgeDiamond::tate(-1), HodgeDiamond::tate(-1)) == HodgeDiamond::tate(-2));
  CHECK(tensor(elliptic_h1, HodgeDiamond::tate(-1)) == HodgeDiamond({{{2, 1}, Integer(1)}, {{1, 2}, Integer(1)}}));
  const PolyUV e = UV("1 - u - v + u*v");
  CHECK(e_polynomial(tensor(elliptic_full, elliptic_full)) == e * e);
  CHECK(tensor(HodgeDiamond::tate(0), HodgeDiamond::tate(-1)).pure_weight() == 2);
}

TEST_CASE("dual examples") {
  CHECK(dual(HodgeDiamond::tate(-1)) == HodgeDiamond::tate(1));
  const HodgeDiamond sym({{{1, -1}, Integer(2)}, {{-1, 1}, Integer(2)}, {{0, 0}, Integer(5)}});
  CHECK(dual(sym) == sym);
}

TEST_CASE("tate twist examples") {
  CHECK(tate_twist(HodgeDiamond::tate(0), -1) == HodgeDiamond::tate(-1));
  CHECK(tate_twist(tate_twist(p2_diamond, 3), -3) == p2_diamond);
  CHECK(chi_y(tate_twist(p2_diamond, -1)) == Y("-y") * chi_y(p2_diamond));
}

TEST_CASE("e_polynomial and chi_y examples") {
  CHECK(e_polynomial(HodgeDiamond::tate(-1)) == UV("u*v"));
  CHECK(e_polynomial(elliptic_full) == UV("1 - u - v + u*v"));
  CHECK(e_polynomial(HodgeDiamond()).is_zero());
  CHECK(chi_y(HodgeDiamond::tate(-1)) == Y("-y"));
  CHECK(chi_y(elliptic_full).is_zero());
  CHECK(chi_y(p2_diamond) == Y("1 - y + y^2"));
}

TEST_CASE("pure structures validate their shape") {
  CHECK_NOTHROW(HodgeDiamond::pure(1, {{{1, 0}, Integer(1)}, {{0, 1}, Integer(1)}}));
  CHECK_THROWS_AS(HodgeDiamond::pure(1, {{{1, 0}, Integer(1)}}), InvalidParameter);
  CHECK_THROWS_AS(HodgeDiamond::pure(2, {{{1, 0}, Integer(1)}, {{0, 1}, Integer(1)}}), InvalidParameter);
  CHECK(render_triples(elliptic_h1) == "[[0,1,1],[1,0,1]]");
}

TEST_CASE("hodge invariants on random diamonds") {
  std::mt19937 rng(21);
  for (int i = 0; i < 300; ++i) {
    const HodgeDiamond a = testing::random_diamond(rng), b = testing::random_diamond(rng);
    CHECK(e_polynomial(tensor(a, b)) == e_polynomial(a) * e_polynomial(b));
    CHECK(e_polynomial(dual(a)) == substitute(e_polynomial(a), UV("u^-1"), UV("v^-1")));
    CHECK(chi_y(dual(a)) == chi_y(a).inverted());
    CHECK(chi_y(a).evaluate(Rational(-1)) == Rational(a.total_dimension()));
    CHECK(chi_y(a) == chi_y_specialization(e_polynomial(a)));
  }
}

TEST_CASE("pure symmetric structures") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> h(0, 4);
  for (int n = 1; n <= 5; n += 2) {
    for (int trial = 0; trial < 20; ++trial) {
      HodgeDiamond::Entries e;
      for (int p = 0; 2 * p < n; ++p) {
        const int v = h(rng);
        e[{p, n - p}] = v;
        e[{n - p, p}] = v;
      }
      const HodgeDiamond d = HodgeDiamond::pure(n, e);
      CHECK(e_polynomial(d) == e_polynomial(d).swapped());
      // odd weight: chi_1 vanishes
      CHECK(chi_y(d).evaluate(Rational(1)) == Rational(0));
    }
  }
}
