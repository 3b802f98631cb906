#include "algdyn/number.hpp"

#include <cctype>

namespace algdyn {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer_digits(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", offset + i);
    }
  }
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto slash = text.find('/', pos);
  Integer num = parse_integer_digits(text.substr(pos, slash - pos), pos);
  Integer den(1);
  if (slash != std::string_view::npos) {
    den = parse_integer_digits(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

Rational power(const Rational& base, unsigned exponent) {
  return Rational(mp::pow(numerator(base), exponent), mp::pow(denominator(base), exponent));
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  k = std::min(k, n - k);
  Integer r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(std::int64_t n) {
  Integer r(1);
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace algdyn
