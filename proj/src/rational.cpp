#include "mzv/rational.hpp"

#include <cctype>

#include "mzv/errors.hpp"

namespace mzv {

std::string to_string(const Rational& q) {
  const Integer& num = boost::multiprecision::numerator(q);
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  Integer num = parse_integer(body.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  }
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

Rational power_of_two(int e) {
  Integer p = 1;
  p <<= (e < 0 ? -e : e);
  return e < 0 ? Rational(1, p) : Rational(p);
}

}  // namespace mzv
