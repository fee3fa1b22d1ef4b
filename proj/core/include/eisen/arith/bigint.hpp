#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eisen {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }
inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

// Representative in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace eisen
