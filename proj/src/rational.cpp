#include "hirz/rational.hpp"

#include <stdexcept>

#include "hirz/error.hpp"

namespace hirz {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError(1, {"rational number"}, "malformed number '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  Rational result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace hirz
