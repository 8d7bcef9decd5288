#pragma once

#include "conic/types.hpp"

#include <string>
#include <string_view>

namespace conic {

// Reads a polynomial equation in x and y of total degree <= 2 and returns
// the half-convention coefficients. Accepted syntax (see README for the
// EBNF):
//
//   equation    :=  polynomial [ '=' polynomial ]     missing '=' means '= 0'
//   polynomial  :=  signed term { ('+'|'-') signed term }
//   term        :=  coefficient [ '*' ] monomial | coefficient | monomial
//   coefficient :=  number [ '/' number ]             fractions like 3/4
//   monomial    :=  variable [ '^' digits ] [ [ '*' ] variable [ '^' digits ] ]
//   variable    :=  'x' | 'y'
//
// Whitespace is ignored, "xy", "x*y" and "y x" all denote the cross term,
// and numbers may be integers, decimals or scientific ("1e-3"). The right
// side is subtracted from the left. Errors (unknown variable, a term of
// degree > 2, stray tokens, an equation whose coefficients all cancel)
// raise ParseError with the offending position.
GeneralConic parse_conic(std::string_view text);

// Canonical text form with printed (doubled) coefficients, e.g.
// "3x^2 - 2xy + y^2 - x + y + 5 = 0". Numbers use the shortest
// representation that round-trips, so parse_conic(format_conic(c))
// reproduces c exactly: halving and doubling are exact in binary floating
// point and never lose a bit.
std::string format_conic(const GeneralConic& c);

// Same, with primed variable names (canonical frames).
std::string format_conic_primed(const GeneralConic& c);

// "11x + 5y - 17 = 0": rescales the unit-normalized line to small integer
// coefficients when a rational reconstruction within 1e-9 exists, and
// falls back to six significant digits otherwise.
std::string format_line(const Line& line);

// Shortest decimal representation that parses back to exactly v.
std::string format_number(double v);

} // namespace conic
