#include "hirz/rational_function.hpp"

#include "hirz/error.hpp"
#include "hirz/poly_text.hpp"

namespace hirz {

bool divide_by_one_plus_y(const LaurentY& p, LaurentY& quotient) {
  if (p.is_zero()) {
    quotient = LaurentY();
    return true;
  }
  // p = (1+y) q with q spanning exponents [lo, hi-1]; solve from the top down.
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  if (lo == hi) return false;
  LaurentY::Terms q;
  Rational carry;  // q_e for the exponent just above
  for (int e = hi; e > lo; --e) {
    Rational qe = p.coefficient(e) - carry;  // coefficient of y^e is q_{e-1} + q_e
    q[e - 1] = qe;
    carry = qe;
  }
  if (p.coefficient(lo) != carry) return false;
  quotient = LaurentY(std::move(q));
  return true;
}

RationalFunctionY::RationalFunctionY(LaurentY numerator, int denominator_power)
    : num_(std::move(numerator)), k_(denominator_power) {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ < 0) {
    num_ = num_ * one_plus_y();
    ++k_;
  }
  LaurentY q;
  while (k_ > 0 && divide_by_one_plus_y(num_, q)) {
    num_ = std::move(q);
    --k_;
  }
}

RationalFunctionY RationalFunctionY::inverted() const {
  return RationalFunctionY(num_.inverted() * LaurentY::y(k_), k_);
}

Rational RationalFunctionY::evaluate(const Rational& y) const {
  if (k_ > 0 && y == Rational(-1))
    throw NotPolynomial("pole at y = -1 in " + render(*this));
  return num_.evaluate(y) / pow(Rational(1) + y, k_);
}

RationalFunctionY& RationalFunctionY::operator+=(const RationalFunctionY& o) {
  const int k = std::max(k_, o.k_);
  LaurentY a = num_ * one_plus_y().pow(static_cast<unsigned>(k - k_));
  LaurentY b = o.num_ * one_plus_y().pow(static_cast<unsigned>(k - o.k_));
  return *this = RationalFunctionY(a + b, k);
}

RationalFunctionY& RationalFunctionY::operator-=(const RationalFunctionY& o) { return *this += -o; }

RationalFunctionY& RationalFunctionY::operator*=(const RationalFunctionY& o) {
  return *this = RationalFunctionY(num_ * o.num_, k_ + o.k_);
}

RationalFunctionY& RationalFunctionY::operator*=(const Rational& c) {
  return *this = RationalFunctionY(num_ * c, k_);
}

LaurentY reduce_unit_denominator(const RationalFunctionY& q) {
  if (q.denominator_power() != 0)
    throw NotPolynomial("class has a pole at y = -1: " + render(q));
  return q.numerator();
}

}  // namespace hirz
