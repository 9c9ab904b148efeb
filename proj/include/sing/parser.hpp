#pragma once

#include <string>
#include <vector>

#include "sing/polynomial.hpp"

namespace sing {

/// Parses the polynomial grammar
///
///   expr := ("+"|"-")? term (("+"|"-") term)* ;
///   term := factor ("*" factor)* ;
///   factor := base ("^" nat)? ;
///   base := rational | ident | "(" expr ")" ;
///   rational := int ("/" nat)? ;
///
/// Whitespace is insignificant; implicit multiplication is not allowed
/// ("xy" is one identifier). Every identifier must appear in vars.
/// Throws ParseError (position-annotated) on malformed input, unknown
/// variables, or a zero-denominator rational literal.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

}  // namespace sing
