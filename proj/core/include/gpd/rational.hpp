#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gpd {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline int cmp(const Rational& a, const Rational& b) {
  return a < b ? -1 : (a == b ? 0 : 1);
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace gpd
