#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace effrand {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b", an integer, or a plain decimal ("0.05", "-1.25") exactly.
Rational parse_rational(std::string_view text);
double to_double(const Rational& q);
/// "3/4" or "2" (canonical, lowest terms).
std::string to_string(const Rational& q);

}  // namespace effrand
