#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace orc {

// All externally visible numbers are exact rationals. cpp_rational keeps
// lowest terms with a positive denominator, which is exactly the canonical
// form the serializers rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "num/den" or a bare integer ("-3/4", "7", "  1/2 " is rejected:
// no whitespace). Throws Error("ParseError") naming the offending text.
Rational parse_rational(std::string_view text);

// Canonical serialization, always "num/den" (integers render as "n/1").
std::string format_rational(const Rational& r);

Int floor_rational(const Rational& r);
Int ceil_rational(const Rational& r);
bool is_integer(const Rational& r);

// Fixed-point decimal rendering with `digits` fractional digits, rounded
// half away from zero. Informational only; exact values stay rational.
std::string decimal_hint(const Rational& r, int digits = 12);

}  // namespace orc
