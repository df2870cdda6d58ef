#pragma once

#include <random>
#include <string>

#include "hirz/hodge.hpp"
#include "hirz/laurent.hpp"
#include "hirz/poly_uv.hpp"
#include "hirz/poly_text.hpp"

namespace hirz::testing {

inline LaurentY Y(const std::string& s) { return parse_laurent_y(s); }
inline PolyUV UV(const std::string& s) { return parse_poly_uv(s); }

inline LaurentY random_laurent(std::mt19937& rng, int lo = -3, int hi = 4) {
  std::uniform_int_distribution<int> terms(0, 4), exponent(lo, hi), num(-9, 9), den(1, 5);
  LaurentY p;
  for (int i = terms(rng); i > 0; --i) p += LaurentY::monomial(Rational(num(rng), den(rng)), exponent(rng));
  return p;
}

inline PolyUV random_uv(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exponent(-2, 3), coef(-6, 6);
  PolyUV p;
  for (int i = terms(rng); i > 0; --i) p += PolyUV::monomial(Integer(coef(rng)), exponent(rng), exponent(rng));
  return p;
}

inline HodgeDiamond random_diamond(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 6), index(-3, 3), value(-5, 5);
  HodgeDiamond d;
  for (int i = count(rng); i > 0; --i) d += HodgeDiamond({{{index(rng), index(rng)}, Integer(value(rng))}});
  return d;
}

}  // namespace hirz::testing
