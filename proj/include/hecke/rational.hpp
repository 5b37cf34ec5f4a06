#pragma once

// Arbitrary-precision scalars. Coefficients in this library are exact
// rationals; fixed-width integers overflow long before rank 5.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;  // "p" or "p/q", canonical (gcd-reduced, positive denominator)
  return os.str();
}

inline std::string to_string(const BigInt& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

/// num/den with the sign moved into the numerator; the underlying type
/// rejects negative denominators outright.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

/// Parse "p" or "p/r" (optional leading '-'). Throws std::invalid_argument.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return make_rational(std::move(num), std::move(den));
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("parse_rational: ") + e.what());
  }
}

/// x^k for integer k (negative allowed; x must be nonzero when k < 0).
inline Rational pow_rational(const Rational& x, long k) {
  if (k < 0) {
    if (x == 0) throw std::domain_error("pow_rational: 0 to a negative power");
    return pow_rational(make_rational(denominator(x), numerator(x)), -k);
  }
  Rational acc(1), base = x;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace hecke
