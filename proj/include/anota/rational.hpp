#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace anota {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Largest integer <= q.
inline Integer rat_floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);  // d > 0 by cpp_rational invariant
  Integer t = n / d;
  if (n % d != 0 && n < 0) --t;
  return t;
}

inline Integer rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline bool rat_is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string rat_to_string(const Rational& q) {
  if (rat_is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace anota
