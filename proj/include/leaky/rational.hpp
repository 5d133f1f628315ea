#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace leaky {

// All counts in this library are exact rationals; there is no floating-point
// mode anywhere. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading '-'. Rejects q == 0.
std::optional<Rational> parse_rational(std::string_view s);

BigInt factorial(unsigned n);

}  // namespace leaky
