#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdrg {

/// Exact rational scalar used for every order parameter and intersection number.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with an explicit "/1".
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);
/// Like format_rational but integers are written without "/1".
std::string format_rational_short(const Rational& value);

} // namespace mdrg
