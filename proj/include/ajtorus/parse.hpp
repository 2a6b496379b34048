#pragma once

/**
 * @file parse.hpp
 * @brief Text format for polynomials and operators in t, M and L.
 *
 * Accepted syntax is a small arithmetic language over the variables t, M, L:
 *
 *     expr   := ['+'|'-'] term (('+'|'-') term)*
 *     term   := factor (('*'|'/') factor)*
 *     factor := atom ['^' ['-'] int]
 *     atom   := int | 't' | 'M' | 'L' | '(' expr ')'
 *
 * e.g. "3*t^-2*M^4*L^2 - 1" or "(t^2 - 1)/(M + 1)*L^3". The printers of
 * BLaurent, RationalFunction and SkewOperator emit a subset of this
 * language, so print -> parse round-trips exactly.
 *
 * L is treated as commuting with t and M while parsing. For operators the
 * convention is that every term is written as coefficient * L^i, which is
 * exactly what the printer emits.
 */

#include <map>
#include <string>
#include <string_view>

#include "ajtorus/ratfunc.hpp"

namespace ajt {

// L-exponent -> coefficient in Q(t, M).
using LPolynomial = std::map<int, RationalFunction>;

LPolynomial parse_l_polynomial(std::string_view text);
// As above, but L must not occur.
RationalFunction parse_rational_function(std::string_view text);
// As above, and the value must be a Laurent polynomial.
BLaurent parse_laurent(std::string_view text);

// Renders sum of coefficient * var^i, highest exponent first. Coefficients
// that are not monomials are parenthesized.
std::string render_l_polynomial(const std::map<int, std::string>& coeffs, const std::string& var = "L");

}  // namespace ajt
