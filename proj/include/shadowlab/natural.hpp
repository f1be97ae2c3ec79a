#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shadowlab {

/// Arbitrary-precision non-negative integer. Negative values never escape the
/// public API; callers that subtract must check first.
using Natural = boost::multiprecision::cpp_int;

/// Exact rational over `Natural`-sized numerators and denominators.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Natural& n) { return n.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  const Natural num = boost::multiprecision::numerator(q);
  const Natural den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Decimal rendering with 12 significant digits; the serialized form for every
/// real-valued output.
std::string format_real(double x);
std::string format_real(long double x);

/// Natural logarithm of a (possibly huge) positive integer.
long double log_natural(const Natural& n);

inline std::uint64_t to_u64(const Natural& n) { return n.convert_to<std::uint64_t>(); }

}  // namespace shadowlab
