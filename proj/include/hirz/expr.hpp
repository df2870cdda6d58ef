#pragma once

#include <memory>
#include <string>

namespace hirz {

/// Building blocks of classes in the Grothendieck ring of varieties.
enum class AtomKind { Point, Affine, Lefschetz, Torus, Projective, Curve, Custom };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Display tree of a motivic class. `Dual` is the motivic duality involution.
struct Expr {
  enum class Kind { Atom, Integer, Add, Sub, Mul, Dual };

  Kind kind = Kind::Integer;
  AtomKind atom = AtomKind::Point;
  long long value = 0;  // atom parameter (n or g) or integer literal
  std::string label;    // custom atoms only
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr make_atom(AtomKind atom, long long parameter = 0, std::string label = {});
  static ExprPtr make_integer(long long value);
  static ExprPtr make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_dual(ExprPtr operand);
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

/// Minimal-parenthesis rendering that parses back to the same tree, e.g. "P2 - 2 * P1 + pt".
std::string render(const Expr& e);

}  // namespace hirz
