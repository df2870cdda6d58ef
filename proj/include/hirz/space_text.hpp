#pragma once

#include <string_view>

#include "hirz/space.hpp"

namespace hirz {

/// Space descriptions: `P<n>`, `A x B` (left associative, parentheses allowed),
/// `Proj(<base>; a1,...,ar)` for P(O(a1) + ... + O(ar)), `Hyp(<n>,<d>)`, `Arr(<n>,<k>)`.
/// Throws ParseError, or InvalidParameter for out-of-range parameters.
SpacePtr parse_space(std::string_view text);

/// Line-oriented presentation of a custom space:
///
///   name X
///   dim 2
///   gen a 1
///   gen b 1
///   rel a^2 = 0
///   rel b^2 = 0
///   int a*b = 1
///   chern 1 + 2*a + 2*b + 4*a*b
///   hyperplane a + b
///   logcotangent 2 1
///   divisor a
///
/// Blank lines and text after '#' are ignored. Offsets in ParseError count from the start
/// of the document.
CustomSpaceSpec parse_space_document(std::string_view text);

}  // namespace hirz
