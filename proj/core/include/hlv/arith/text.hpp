#pragma once

#include <string>
#include <string_view>

#include "hlv/arith/rational_function.hpp"

namespace hlv {

// Canonical form: terms in decreasing monomial order separated by "; ", each
// written as "p/q" followed by " var:exp" pairs, e.g. "1/1 z:2; -2/1 z:1 w:1".
// The zero polynomial is "0". A rational function with a nontrivial
// denominator is written "num // den".
std::string to_canonical(const Poly& p);
std::string to_canonical(const RationalFunction& f);

// Inverse of to_canonical. Throws std::invalid_argument on malformed input.
Poly parse_canonical_poly(std::string_view text);
RationalFunction parse_canonical(std::string_view text);

// Human-readable form such as "z^2 - 2*z*w + w^2" or "(1) / (z^2 - 1)".
std::string to_pretty(const Poly& p);
std::string to_pretty(const RationalFunction& f);

}  // namespace hlv
