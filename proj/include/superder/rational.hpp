#ifndef SUPERDER_RATIONAL_HPP
#define SUPERDER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace superder {

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// zero is 0/1. All arithmetic is exact; division by zero throws.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "2", "-1", "1/2", "-3/4". Whitespace, signs on the denominator and
/// decimal points are rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

/// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string rational_str(const Rational& r);

}  // namespace superder

#endif
