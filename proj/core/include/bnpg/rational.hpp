#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bnpg {

// Exact rational numbers. Payoff comparisons are tie-critical, so nothing in
// the library ever goes through floating point.
using Rational = mpq_class;

// Accepts integers ("12", "-3"), decimals ("0.25") and fractions ("7/4").
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "p/q" when non-integral, plain integer otherwise. Locale independent.
std::string to_string(const Rational& value);

}  // namespace bnpg
