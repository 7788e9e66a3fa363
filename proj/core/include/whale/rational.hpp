#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>

namespace whale {

// Exact arithmetic only. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the kernel needs.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Pivot weight: combined bit size of numerator and denominator.
inline std::size_t bit_size(const Rational& q) {
  const Integer num = boost::multiprecision::abs(numerator(q));
  const Integer den = denominator(q);
  std::size_t bits = 0;
  if (num != 0) bits += msb(num) + 1;
  if (den != 0) bits += msb(den) + 1;
  return bits;
}

/// "p" or "p/q", q > 0.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace whale
