#include "shadowlab/natural.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace shadowlab {

std::string format_real(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  return buf;
}

std::string format_real(double x) { return format_real(static_cast<long double>(x)); }

long double log_natural(const Natural& n) {
  if (n <= 0) throw std::domain_error("log of a non-positive integer");
  const unsigned msb = boost::multiprecision::msb(n);
  if (msb < 63) return std::log(static_cast<long double>(to_u64(n)));
  const unsigned shift = msb - 62;
  const Natural top = n >> shift;
  return std::log(static_cast<long double>(to_u64(top))) + shift * std::log(2.0L);
}

}  // namespace shadowlab
