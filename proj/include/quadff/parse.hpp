#pragma once

#include "quadff/polyring.hpp"

#include <string>
#include <string_view>

namespace quadff {

// Parses the syntax poly_render produces, plus the obvious hand-written
// variants: terms joined by '+' or '-', each one of
//   coeff '*' VAR ['^' exponent]   (the '*' may be omitted)
//   VAR ['^' exponent]
//   coeff
// where coeff is a nonnegative integer (reduced mod p) or, over an extension
// field, a parenthesized polynomial in the generator symbol with the same
// term syntax. Whitespace is insignificant. Repeated powers accumulate.
// Throws ParseError (with the byte offset) on malformed input; exponents are
// capped so a typo cannot allocate an absurd polynomial.
Polynomial poly_parse(const FieldSpec& k, std::string_view text, const std::string& var = "T",
                      const std::string& gen = "a");

}  // namespace quadff
