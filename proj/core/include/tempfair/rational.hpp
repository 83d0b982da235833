#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tempfair {

/// Exact arbitrary-precision rational. Every value in the library is one of
/// these; no floating point is used anywhere, because several algorithms
/// branch on exact sign tests.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or a plain integer string (optional leading '-').
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Formats as "p" when the value is an integer, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace tempfair
