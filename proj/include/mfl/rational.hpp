#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mfl {

using Rational = mpq_class;

// "p/q" in lowest terms with the sign on the numerator; integers print bare.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws SyntaxError on malformed input or a zero
// denominator.
Rational parse_rational(std::string_view text);

}  // namespace mfl
