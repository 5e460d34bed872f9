#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qmon {

// Exact arbitrary-precision integers.  Twist formulas square coordinate sizes
// on every application, so fixed-width arithmetic is not an option.
using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// floor(sqrt(v)) for v >= 0
inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline bool is_perfect_square(const BigInt& v, BigInt* root = nullptr) {
  if (v < 0) return false;
  BigInt r = isqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

}  // namespace qmon
