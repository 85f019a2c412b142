#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace contactkit {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form we require:
// lowest terms, denominator > 0, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_parts(const std::string& num, const std::string& den);

}  // namespace contactkit
