#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace azposet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q" in lowest terms, including integers ("1/1").
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace azposet
