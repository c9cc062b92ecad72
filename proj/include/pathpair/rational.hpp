#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathpair {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p/q", an integer, or a finite decimal such as "0.01". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// 2^e for any integer exponent, exactly.
Rational power_of_two(long e);

}  // namespace pathpair
