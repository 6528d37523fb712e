#include "azposet/rational.hpp"

#include "azposet/error.hpp"

namespace azposet {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) {
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(start));
  BigInt v(digits);
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace azposet
