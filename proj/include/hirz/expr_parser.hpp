#pragma once

#include <string_view>

#include "hirz/expr.hpp"

namespace hirz {

/// Parses the class language:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom | integer | integer factor | '(' expr ')' | 'D(' expr ')'
///   atom   := 'P' int | 'A' int | 'Gm' | 'C' int | 'L' | 'pt'
/// Whitespace is ignored. `integer factor` is a scalar multiple and parses as a product.
/// Throws ParseError carrying the 1-based offset and the set of acceptable tokens.
ExprPtr parse_expr(std::string_view src);

}  // namespace hirz
