#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hirz/laurent.hpp"
#include "hirz/poly_uv.hpp"
#include "hirz/rational.hpp"
#include "hirz/rational_function.hpp"

namespace hirz {

/// One summand of a polynomial written as text: coefficient times a product of powers.
struct ParsedTerm {
  Rational coefficient;
  std::vector<std::pair<std::string, int>> powers;
};

/// Sum of terms such as "1 - 3/2*y + y^-1" or "2*h*xi^2". Variable names are identifiers;
/// a variable may repeat within a term. Throws ParseError.
std::vector<ParsedTerm> parse_terms(std::string_view text);

/// Joins (coefficient, monomial-text) pairs into canonical form, e.g. "1 - y + 3/2*y^2".
/// An empty monomial text denotes the constant term. Zero coefficients are skipped.
std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms);

/// "y", "y^2", "y^-1"; empty for exponent 0.
std::string render_power(std::string_view name, int exponent);

/// Canonical text: increasing exponents, e.g. "1 - y + y^2".
std::string render(const LaurentY& p);
/// Canonical text: increasing total degree, then decreasing u exponent, e.g. "1 - u - v + u*v".
std::string render(const PolyUV& p);
/// "num" when k = 0, otherwise "(num)/(1 + y)^k".
std::string render(const RationalFunctionY& q);

LaurentY parse_laurent_y(std::string_view text);
PolyUV parse_poly_uv(std::string_view text);

}  // namespace hirz
