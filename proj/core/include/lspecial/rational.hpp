#ifndef LSPECIAL_RATIONAL_HPP
#define LSPECIAL_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lspecial/errors.hpp"

namespace lspecial {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical lowest terms with positive
// denominator (maintained by the underlying representation).
using Rational = boost::multiprecision::cpp_rational;

// Parses "[+-]digits" or "[+-]digits/digits".
Rational rat_parse(const std::string& text);

// Canonical "p/q" form, denominator always printed ("3" -> "3/1").
std::string rat_to_string(const Rational& r);

double rat_to_double(const Rational& r);

}  // namespace lspecial

#endif  // LSPECIAL_RATIONAL_HPP
