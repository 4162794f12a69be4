#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fliess {

// Exact rational scalar. cpp_rational keeps the canonical reduced form
// (positive denominator, gcd(|num|, den) = 1) on every operation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p", "-p", "p/q" with optional leading sign; q must be nonzero.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

// Always "p/q" (used by the JSON encoding).
std::string format_rational_frac(const Rational& q);

}  // namespace fliess
