#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "cyclosum/errors.hpp"

namespace cyclosum {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

inline BigInt int_pow(const BigInt& base, std::int64_t e) {
  BigInt r = 1, b = base;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

inline BigRat rat_pow(const BigRat& base, std::int64_t e) {
  if (e < 0) return 1 / rat_pow(base, -e);
  BigRat r = 1, b = base;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

// 1 - p^{-i} as an exact rational.
inline BigRat one_minus_p_pow(std::int64_t p, std::int64_t i) {
  BigInt pi = int_pow(BigInt(p), i);
  return BigRat(pi - 1, pi);
}

inline bool is_integral(const BigRat& q) { return denominator(q) == 1; }

// Formula results assembled in exact rationals must land on an integer; a
// leftover denominator means a transcription error, not a rounding problem.
inline BigInt certified_integer(const BigRat& v, const std::string& what) {
  if (!is_integral(v)) throw FormulaGuardError(what + " evaluated to non-integer " + v.str());
  return numerator(v);
}

}  // namespace cyclosum
