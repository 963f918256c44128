#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ddisc/polynomial.hpp"

namespace ddisc {

/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := signed (('*' signed) | ('/' integer))*
///   signed := ('+' | '-') signed | power
///   power  := primary ('^' integer)?
///   primary:= integer | identifier | '(' expr ')'
/// Juxtaposition ("2x", "x y") is a syntax error.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Canonical text: terms in descending GrevLex order of the ring's variable
/// sequence, explicit '*' and '^', unit coefficients omitted.
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

std::string to_string(const Rational& q);
/// Accepts "7", "-3", "22/7".
Rational parse_rational(std::string_view text);

}  // namespace ddisc
