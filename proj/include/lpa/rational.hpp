#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lpa {

// Exact rational coefficients. No floating point is used anywhere in the
// library; equality of algebra elements has to be decidable.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "3", "-3" or "3/4" (denominator positive).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace lpa
