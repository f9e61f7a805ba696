#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mzv {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: gcd(|num|, den) = 1 and den >= 1.
using Rational = boost::multiprecision::cpp_rational;

// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "n" or "n/d" with an optional leading '-'.
Rational parse_rational(std::string_view text);

// 2^e for any integer e (negative exponents give 1/2^|e|).
Rational power_of_two(int e);

}  // namespace mzv
