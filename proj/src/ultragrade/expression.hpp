#pragma once

#include <string_view>

#include "ultragrade/algebra.hpp"

namespace ultragrade {

/// Parses an algebra expression:
///   expr   := term (('+' | '-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := INT ['/' INT] | 's(' edge ')' | 'st(' edge ')' | 'p{' set '}' | '(' expr ')'
/// Scalars must multiply an element. Output of AlgebraElement::to_string
/// parses back to the same element.
AlgebraElement parse_expression(const Presentation& p, std::string_view text);

}  // namespace ultragrade
