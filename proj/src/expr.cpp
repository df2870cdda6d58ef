#include "hirz/expr.hpp"

namespace hirz {

ExprPtr Expr::make_atom(AtomKind atom, long long parameter, std::string label) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Atom;
  e->atom = atom;
  e->value = parameter;
  e->label = std::move(label);
  return e;
}

ExprPtr Expr::make_integer(long long value) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Integer;
  e->value = value;
  return e;
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Expr::make_dual(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Dual;
  e->lhs = std::move(operand);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Atom:
      return a.atom == b.atom && a.value == b.value && a.label == b.label;
    case Expr::Kind::Integer:
      return a.value == b.value;
    case Expr::Kind::Dual:
      return *a.lhs == *b.lhs;
    default:
      return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    default:
      return 3;
  }
}

std::string atom_text(const Expr& e) {
  switch (e.atom) {
    case AtomKind::Point: return "pt";
    case AtomKind::Affine: return "A" + std::to_string(e.value);
    case AtomKind::Lefschetz: return "L";
    case AtomKind::Torus: return "Gm";
    case AtomKind::Projective: return "P" + std::to_string(e.value);
    case AtomKind::Curve: return "C" + std::to_string(e.value);
    case AtomKind::Custom: return e.label.empty() ? "custom" : e.label;
  }
  return "?";
}

}  // namespace

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Atom:
      return atom_text(e);
    case Expr::Kind::Integer:
      return std::to_string(e.value);
    case Expr::Kind::Dual:
      return "D(" + render(*e.lhs) + ")";
    default:
      break;
  }
  const int p = precedence(e);
  std::string l = render(*e.lhs);
  std::string r = render(*e.rhs);
  if (precedence(*e.lhs) < p) l = "(" + l + ")";
  if (precedence(*e.rhs) <= p) r = "(" + r + ")";
  const char* op = e.kind == Expr::Kind::Add ? " + " : (e.kind == Expr::Kind::Sub ? " - " : " * ");
  return l + op + r;
}

}  // namespace hirz
