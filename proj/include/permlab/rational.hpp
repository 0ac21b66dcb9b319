#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace permlab
