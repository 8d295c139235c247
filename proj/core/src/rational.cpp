#include "effrand/rational.hpp"

#include <cctype>

#include "effrand/error.hpp"

namespace effrand {

using BigInt = boost::multiprecision::cpp_int;

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InvalidArgument("not a number: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("not a number: '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_digits(body.substr(0, slash), text);
    const BigInt den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
    q = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto int_part = body.substr(0, dot);
    const auto frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw InvalidArgument("not a number: '" + std::string(text) + "'");
    const BigInt ip = int_part.empty() ? BigInt(0) : parse_digits(int_part, text);
    const BigInt fp = frac_part.empty() ? BigInt(0) : parse_digits(frac_part, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    q = Rational(ip * scale + fp, scale);
  } else {
    q = Rational(parse_digits(body, text));
  }
  return negative ? Rational(-q) : q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace effrand
