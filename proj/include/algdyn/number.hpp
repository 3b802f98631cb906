#ifndef ALGDYN_NUMBER_HPP
#define ALGDYN_NUMBER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace algdyn {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are off so values
/// behave like plain arithmetic types inside Eigen and std containers.
using Integer = mp::number<mp::gmp_int, mp::et_off>;

/// Exact rational, always reduced with positive denominator (GMP invariant).
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// Error hierarchy shared by every module.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct DegenerateMapError : Error {
  using Error::Error;
};
struct IndeterminacyError : Error {
  using Error::Error;
};
struct MapUndefinedError : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), message(what), position(pos) {}
  std::string message;  ///< without the position suffix
  std::size_t position;
};

inline Integer numerator(const Rational& q) { return mp::numerator(q); }
inline Integer denominator(const Rational& q) { return mp::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "5", "-5/2".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a" or "a/b" with optional sign; throws ParseError.
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, unsigned exponent);

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

}  // namespace algdyn

#endif  // ALGDYN_NUMBER_HPP
