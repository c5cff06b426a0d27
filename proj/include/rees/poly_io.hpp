#pragma once

#include <string>
#include <string_view>

#include "rees/polynomial.hpp"

namespace rees {

/// Parses the polynomial grammar
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | var | var '^' nat | '(' expr ')'
///   coeff  := integer | integer '/' integer
///   var    := ('x'|'y') nat
///
/// Whitespace is ignored. Implicit multiplication is rejected. Throws
/// ParseError (Syntax, UnknownVariable, CoefficientNotInField).
template <class K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr<K>& ring);

/// Canonical text: grevlex term order, explicit '*' and '^', terms joined by
/// " + " / " - ", coefficients of prime fields shown symmetrically.
template <class K>
std::string format_poly(const Polynomial<K>& p);

std::string format_monomial(const Monomial& m, const RingSpec& spec);

}  // namespace rees
