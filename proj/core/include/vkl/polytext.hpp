#pragma once

#include <string>

#include "vkl/ratfun.hpp"

namespace vkl {

// Canonical polynomial text syntax. Terms are printed in ascending graded-lex
// order with explicit '*' and '^', the Gaussian unit spelled I, and complex
// coefficients parenthesized:
//
//     2+5*t^2+2*t^4
//     (-3/2+1/2*I)*a^2*t
//     (-1+2*t)/(a-1)
//
// This rendering is deterministic and is the golden-file / CLI output format.
std::string poly_to_text(const MPoly& p);
std::string ratfun_to_text(const RatFun& f);

// Expression parser for the same syntax, extended with '/' and negative
// exponents so that parameter values and golden values round-trip. Accepted
// grammar (whitespace free between tokens is not required):
//
//     expr   := ['+'|'-'] term {('+'|'-') term}
//     term   := factor {('*'|'/') factor}
//     factor := primary ['^' ['-'] integer]
//     primary:= integer | 'I' | variable | '(' expr ')'
//
// Variables must belong to the given ring.
RatFun parse_ratfun(const PolyRingPtr& ring, const std::string& text);

// As above but requires the result to be a polynomial.
MPoly parse_poly(const PolyRingPtr& ring, const std::string& text);

} // namespace vkl
