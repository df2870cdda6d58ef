#include "hirz/laurent.hpp"

#include <stdexcept>

namespace hirz {

LaurentY::LaurentY(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentY::LaurentY(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentY LaurentY::monomial(const Rational& coefficient, int exponent) {
  LaurentY p;
  p.add_term(exponent, coefficient);
  return p;
}

Rational LaurentY::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentY::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentY::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

void LaurentY::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentY LaurentY::inverted() const {
  LaurentY r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Rational LaurentY::evaluate(const Rational& y) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && y.is_zero()) throw std::domain_error("Laurent polynomial evaluated at y = 0");
    sum += c * hirz::pow(y, e);
  }
  return sum;
}

LaurentY LaurentY::pow(unsigned exponent) const {
  LaurentY result(1);
  LaurentY base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

LaurentY& LaurentY::operator+=(const LaurentY& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentY& LaurentY::operator-=(const LaurentY& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentY& LaurentY::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentY operator*(const LaurentY& a, const LaurentY& b) {
  LaurentY r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentY LaurentY::operator-() const {
  LaurentY r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

}  // namespace hirz
