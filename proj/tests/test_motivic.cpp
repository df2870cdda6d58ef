#include <doctest.h>

#include <random>

#include "hirz/error.hpp"
#include "hirz/expr_parser.hpp"
#include "hirz/motivic.hpp"
#include "support.hpp"

using namespace hirz;
using hirz::testing::UV;
using hirz::testing::Y;

namespace {

MotivicClass atom(AtomKind k, long long n = 0) { return motivic_atom(k, n); }

/// [P^n] by the scissor recursion P^n = A^n + P^{n-1}, A^n = L^n.
HodgeDiamond scissor_projective(int n) {
  HodgeDiamond d;
  for (int j = 0; j <= n; ++j) {
    HodgeDiamond affine = HodgeDiamond::tate(0);
    for (int i = 0; i < j; ++i) affine = tensor(affine, HodgeDiamond({{{1, 1}, Integer(1)}}));
    d += affine;
  }
  return d;
}

}  // namespace

TEST_CASE("motivic atoms") {
  CHECK(atom(AtomKind::Lefschetz).realization() == HodgeDiamond({{{1, 1}, Integer(1)}}));
  CHECK(e_polynomial(atom(AtomKind::Lefschetz)) == UV("u*v"));
  CHECK(atom(AtomKind::Torus).realization() == HodgeDiamond({{{1, 1}, Integer(1)}, {{0, 0}, Integer(-1)}}));
  CHECK(atom(AtomKind::Projective, 2).realization() ==
        HodgeDiamond({{{0, 0}, Integer(1)}, {{1, 1}, Integer(1)}, {{2, 2}, Integer(1)}}));
  CHECK(atom(AtomKind::Point).realization() == HodgeDiamond::tate(0));
  CHECK(atom(AtomKind::Affine, 3).realization() == HodgeDiamond::tate(-3));
  CHECK(e_polynomial(atom(AtomKind::Curve, 2)) == UV("1 - 2*u - 2*v + u*v"));
  CHECK_THROWS_AS(atom(AtomKind::Projective, -1), InvalidParameter);
  CHECK_THROWS_AS(atom(AtomKind::Curve, -2), InvalidParameter);
}

TEST_CASE("scissor recursion oracle for projective spaces") {
  for (int n = 0; n <= 6; ++n) CHECK(atom(AtomKind::Projective, n).realization() == scissor_projective(n));
}

TEST_CASE("motivic_combine examples") {
  CHECK((atom(AtomKind::Projective, 1) - atom(AtomKind::Point)).realization() == atom(AtomKind::Lefschetz).realization());
  CHECK(e_polynomial(atom(AtomKind::Projective, 1) * atom(AtomKind::Projective, 1)) == UV("1 + u*v") * UV("1 + u*v"));
  const MotivicClass two_lines =
      atom(AtomKind::Projective, 2) - motivic_integer(2) * atom(AtomKind::Projective, 1) + atom(AtomKind::Point);
  CHECK(e_polynomial(two_lines) == UV("u^2*v^2 - u*v"));
  CHECK(motivic_arrangement_complement(2, 2).realization() == two_lines.realization());
  // A^1 = G_m + pt
  CHECK((atom(AtomKind::Torus) + atom(AtomKind::Point)).realization() == atom(AtomKind::Affine, 1).realization());
}

TEST_CASE("motivic_dual examples") {
  CHECK(motivic_dual(atom(AtomKind::Projective, 1)).realization() ==
        HodgeDiamond({{{-1, -1}, Integer(1)}, {{0, 0}, Integer(1)}}));
  CHECK(motivic_dual(atom(AtomKind::Point)).realization() == atom(AtomKind::Point).realization());
  CHECK(motivic_dual(atom(AtomKind::Lefschetz)).realization() == HodgeDiamond::tate(1));
}

TEST_CASE("duality of smooth proper atoms is L^-m") {
  const MotivicClass l_inv = motivic_dual(atom(AtomKind::Lefschetz));
  for (int n = 0; n <= 4; ++n) {
    MotivicClass scale = atom(AtomKind::Point);
    for (int i = 0; i < n; ++i) scale = scale * l_inv;
    CHECK(motivic_dual(atom(AtomKind::Projective, n)).realization() == (scale * atom(AtomKind::Projective, n)).realization());
  }
  for (int g = 0; g <= 4; ++g) {
    const PolyUV e = e_polynomial(atom(AtomKind::Curve, g));
    CHECK(substitute(e, UV("u^-1"), UV("v^-1")) == UV("u^-1*v^-1") * e);
  }
}

TEST_CASE("motivic invariants on random classes") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(0, 5), param(0, 3);
  auto random_class = [&] {
    MotivicClass c = atom(AtomKind::Point);
    for (int i = 0; i < 3; ++i) {
      MotivicClass a = atom(AtomKind::Point);
      switch (pick(rng)) {
        case 0: a = atom(AtomKind::Projective, param(rng)); break;
        case 1: a = atom(AtomKind::Affine, param(rng)); break;
        case 2: a = atom(AtomKind::Torus); break;
        case 3: a = atom(AtomKind::Curve, param(rng)); break;
        case 4: a = atom(AtomKind::Lefschetz); break;
        default: break;
      }
      c = i % 2 ? c * a : c - a;
    }
    return c;
  };
  for (int i = 0; i < 100; ++i) {
    const MotivicClass a = random_class(), b = random_class();
    CHECK(chi_c_y(a * b) == chi_c_y(a) * chi_c_y(b));
    CHECK(motivic_dual(motivic_dual(a)).realization() == a.realization());
    CHECK(motivic_dual(a * b).realization() == (motivic_dual(a) * motivic_dual(b)).realization());
    CHECK(e_polynomial(motivic_dual(a)) == substitute(e_polynomial(a), UV("u^-1"), UV("v^-1")));
  }
}

TEST_CASE("evaluate follows the expression tree") {
  const MotivicClass c = evaluate(parse_expr("P2 * P1 - L"));
  CHECK(c.realization() == (atom(AtomKind::Projective, 2) * atom(AtomKind::Projective, 1) - atom(AtomKind::Lefschetz)).realization());
  CHECK(render(*c.expr()) == "P2 * P1 - L");
  CHECK(evaluate(parse_expr("D(P1)")).realization() == motivic_dual(atom(AtomKind::Projective, 1)).realization());
  CHECK(chi_c_y(evaluate(parse_expr("Gm * Gm"))) == Y("1 + 2*y + y^2"));
}
