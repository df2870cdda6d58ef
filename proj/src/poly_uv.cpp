#include "hirz/poly_uv.hpp"

#include <stdexcept>

namespace hirz {

PolyUV::PolyUV(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, Integer(constant));
}

PolyUV::PolyUV(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

PolyUV PolyUV::monomial(const Integer& coefficient, int u_exp, int v_exp) {
  PolyUV p;
  p.add_term({u_exp, v_exp}, coefficient);
  return p;
}

Integer PolyUV::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

PolyUV PolyUV::swapped() const {
  PolyUV r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
  return r;
}

void PolyUV::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyUV& PolyUV::operator+=(const PolyUV& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyUV& PolyUV::operator-=(const PolyUV& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyUV operator*(const PolyUV& a, const PolyUV& b) {
  PolyUV r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

PolyUV PolyUV::operator-() const {
  PolyUV r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

// Powers of a substitution target, including negative ones when it is invertible.
template <class P, class Invert>
P power_of(const P& base, int exponent, Invert invert) {
  if (exponent >= 0) {
    P r(1);
    for (int i = 0; i < exponent; ++i) r = r * base;
    return r;
  }
  P inv = invert(base);
  P r(1);
  for (int i = 0; i < -exponent; ++i) r = r * inv;
  return r;
}

LaurentY invert_laurent_monomial(const LaurentY& m) {
  if (m.terms().size() != 1) throw std::domain_error("substitution value is not an invertible monomial");
  const auto& [e, c] = *m.terms().begin();
  return LaurentY::monomial(Rational(1) / c, -e);
}

PolyUV invert_uv_monomial(const PolyUV& m) {
  if (m.terms().size() != 1) throw std::domain_error("substitution value is not an invertible monomial");
  const auto& [e, c] = *m.terms().begin();
  if (c != 1 && c != -1) throw std::domain_error("substitution coefficient is not a unit over Z");
  return PolyUV::monomial(c, -e.first, -e.second);
}

}  // namespace

LaurentY substitute(const PolyUV& p, const LaurentY& mu, const LaurentY& nu) {
  LaurentY r;
  for (const auto& [e, c] : p.terms()) {
    LaurentY term = power_of(mu, e.first, invert_laurent_monomial) *
                    power_of(nu, e.second, invert_laurent_monomial);
    r += term * Rational(c);
  }
  return r;
}

PolyUV substitute(const PolyUV& p, const PolyUV& mu, const PolyUV& nu) {
  PolyUV r;
  for (const auto& [e, c] : p.terms()) {
    PolyUV term = power_of(mu, e.first, invert_uv_monomial) * power_of(nu, e.second, invert_uv_monomial);
    r += term * PolyUV::monomial(c, 0, 0);
  }
  return r;
}

}  // namespace hirz
