#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fourplanar {

// Exact arithmetic throughout the certifier; fractions like 1/9 and 1/18
// must never be rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_frac_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace fourplanar
