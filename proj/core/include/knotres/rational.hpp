#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotres {

using Integer = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator, always kept
// in lowest terms with positive denominator (cpp_rational maintains this).
using Rational = boost::multiprecision::cpp_rational;

// Canonical serialization: "p/q" in lowest terms, "p" when q == 1.
std::string to_string(const Rational& r);

// Parses "p", "p/q", or "-p/q". Throws Error("MalformedSyntax") on bad input
// or zero denominator.
Rational parse_rational(const std::string& s);

}  // namespace knotres
