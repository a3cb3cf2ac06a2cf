#pragma once

#include <string>

#include "aschur/yangian.hpp"

namespace aschur {

/**
 * Canonical text serialization and exact parsers.
 *
 * The printers are the str() methods of the value types; every parser
 * here inverts the corresponding printer exactly, so
 * parse(serialize(x)) == x for all values. The format is line-oriented
 * ASCII with deterministic term order (inherited from the ordered maps
 * inside the values), rationals as "p" or "p/q", monomials as
 * "x1^a1*x2^a2", and matrices row-major bracketed. All parsers throw
 * std::invalid_argument on malformed input.
 */

// "(1,0,2)"; the empty composition is "()".
std::string comp_str(const Composition& mu);
Composition comp_parse(const std::string& s);

// Inverts CosetMatrix::str: "[[1 0 3] [2 2 1]]".
CosetMatrix coset_parse(const std::string& s);

// Inverts Poly::str. The variable count is not visible in the text
// (e.g. "0" and "1" are valid in any number of variables), so it is
// supplied by the caller.
Poly poly_parse(const std::string& s, int nvars);

// Inverts Morphism::str ("0" or "xi{A; f} + ..."). The block of the
// zero morphism is fixed by lam and mu; nonzero terms are checked
// against them.
Morphism morphism_parse(const std::string& s, const Composition& lam,
                        const Composition& mu);

// Inverts ASElement::str (a sum of xi terms across blocks).
ASElement aselement_parse(const std::string& s, int n, int r);

// Series of algebra elements, one coefficient per line:
//   series n=<n> r=<r> order=<N>
//   u^-<d>: <ASElement::str>
// with the keys ascending and zero coefficients omitted.
std::string series_str(const ASeries& s, int n, int r);
ASeries series_parse(const std::string& s);

} // namespace aschur
