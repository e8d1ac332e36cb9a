#pragma once

#include "colorlie/enveloping.hpp"

#include <string_view>

namespace colorlie {

/// Parses an element of U(L):
///
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := ['-'] primary ['^' integer]
///   primary := rational | 'i' | name | '(' expr ')'
///
/// Names are generator names of L; 'i' is the imaginary unit unless L has
/// a generator called i.  Whitespace is ignored.  Throws ParseError with
/// the 0-based offset of the offending character.
EnvelopingElement parse_expression(const UniversalEnvelope &U, std::string_view text);

} // namespace colorlie
