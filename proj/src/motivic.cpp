#include "hirz/motivic.hpp"

#include <algorithm>

#include "hirz/error.hpp"

namespace hirz {

namespace {

HodgeDiamond lefschetz_power(long long n) {
  return HodgeDiamond({{{static_cast<int>(n), static_cast<int>(n)}, Integer(1)}});
}

void require_parameter(long long value, const char* what) {
  if (value < 0) throw InvalidParameter(std::string(what) + " must be non-negative");
  if (value > 100000) throw InvalidParameter(std::string(what) + " is out of range");
}

}  // namespace

MotivicClass motivic_atom(AtomKind kind, long long parameter) {
  HodgeDiamond h;
  switch (kind) {
    case AtomKind::Point:
      h = lefschetz_power(0);
      parameter = 0;
      break;
    case AtomKind::Lefschetz:
      h = lefschetz_power(1);
      parameter = 0;
      break;
    case AtomKind::Torus:
      h = lefschetz_power(1) - lefschetz_power(0);
      parameter = 0;
      break;
    case AtomKind::Affine:
      require_parameter(parameter, "affine dimension");
      h = lefschetz_power(parameter);
      break;
    case AtomKind::Projective:
      require_parameter(parameter, "projective dimension");
      for (long long p = 0; p <= parameter; ++p) h += lefschetz_power(p);
      break;
    case AtomKind::Curve: {
      require_parameter(parameter, "genus");
      const Integer g(static_cast<long>(parameter));
      h = HodgeDiamond({{{0, 0}, Integer(1)}, {{1, 0}, -g}, {{0, 1}, -g}, {{1, 1}, Integer(1)}});
      break;
    }
    case AtomKind::Custom:
      throw InvalidParameter("custom atoms need an explicit diamond");
  }
  return MotivicClass(std::move(h), Expr::make_atom(kind, parameter));
}

MotivicClass motivic_custom(HodgeDiamond realization, std::string label) {
  return MotivicClass(std::move(realization), Expr::make_atom(AtomKind::Custom, 0, std::move(label)));
}

MotivicClass motivic_integer(long long n) {
  return MotivicClass(Integer(static_cast<long>(n)) * lefschetz_power(0), Expr::make_integer(n));
}

MotivicClass motivic_combine(const MotivicClass& a, const MotivicClass& b, CombineOp op) {
  switch (op) {
    case CombineOp::Add:
      return MotivicClass(a.realization() + b.realization(),
                          Expr::make_binary(Expr::Kind::Add, a.expr(), b.expr()));
    case CombineOp::Sub:
      return MotivicClass(a.realization() - b.realization(),
                          Expr::make_binary(Expr::Kind::Sub, a.expr(), b.expr()));
    case CombineOp::Mul:
      return MotivicClass(tensor(a.realization(), b.realization()),
                          Expr::make_binary(Expr::Kind::Mul, a.expr(), b.expr()));
  }
  throw InvalidParameter("unknown combine operation");
}

MotivicClass motivic_dual(const MotivicClass& a) {
  return MotivicClass(dual(a.realization()), Expr::make_dual(a.expr()));
}

MotivicClass motivic_arrangement_complement(int n, int k) {
  if (n < 0 || k < 0 || k > n + 1) throw InvalidParameter("arrangement needs n >= 0 and 0 <= k <= n+1");
  MotivicClass sum = motivic_atom(AtomKind::Projective, n);
  for (int j = 1; j <= std::min(k, n); ++j) {
    const MotivicClass term =
        motivic_integer(static_cast<long long>(binomial(k, j).get_si())) * motivic_atom(AtomKind::Projective, n - j);
    sum = j % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

MotivicClass evaluate(const ExprPtr& expr) {
  const Expr& e = *expr;
  switch (e.kind) {
    case Expr::Kind::Atom:
      if (e.atom == AtomKind::Custom) throw InvalidParameter("cannot evaluate custom atom '" + e.label + "'");
      return MotivicClass(motivic_atom(e.atom, e.value).realization(), expr);
    case Expr::Kind::Integer:
      return MotivicClass(motivic_integer(e.value).realization(), expr);
    case Expr::Kind::Add:
      return MotivicClass(evaluate(e.lhs).realization() + evaluate(e.rhs).realization(), expr);
    case Expr::Kind::Sub:
      return MotivicClass(evaluate(e.lhs).realization() - evaluate(e.rhs).realization(), expr);
    case Expr::Kind::Mul:
      return MotivicClass(tensor(evaluate(e.lhs).realization(), evaluate(e.rhs).realization()), expr);
    case Expr::Kind::Dual:
      return MotivicClass(dual(evaluate(e.lhs).realization()), expr);
  }
  throw InvalidParameter("malformed expression");
}

}  // namespace hirz
