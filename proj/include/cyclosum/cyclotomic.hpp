#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclosum/numbers.hpp"

namespace cyclosum {

// Degree guard for Phi_N reduction. CLI-configurable; default 10^4.
std::int64_t level_ceiling();
void set_level_ceiling(std::int64_t ceiling);

// N-th cyclotomic polynomial Phi_N, coefficients ascending, monic of degree
// phi(N). Results are cached per level. Throws std::invalid_argument when N
// exceeds the level ceiling.
const std::vector<BigInt>& cyclotomic_poly(std::int64_t N);

// Element of Q(zeta_N) in canonical form: phi(N) rational coordinates over
// the power basis zeta^0 .. zeta^{phi(N)-1} after reduction mod Phi_N.
// Values are immutable once constructed and safe to share across threads.
class Cyclotomic {
 public:
  Cyclotomic();                          // 0 at level 1
  explicit Cyclotomic(const BigRat& q);  // rational value at level 1
  explicit Cyclotomic(std::int64_t intval) : Cyclotomic(BigRat(intval)) {}

  static Cyclotomic zero(std::int64_t level = 1);
  static Cyclotomic one(std::int64_t level = 1);

  // Reduce sum_k coeffs[k] * zeta_N^k (indices taken mod N) to canonical form.
  static Cyclotomic from_power_coeffs(std::int64_t N, std::vector<BigRat> coeffs);

  std::int64_t level() const { return level_; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::int64_t level_;
  std::vector<BigRat> coeffs_;  // size phi(level_), canonical

  Cyclotomic(std::int64_t level, std::vector<BigRat> canonical);
};

// zeta_N^j, j arbitrary (reduced mod N).
Cyclotomic cyc_root(std::int64_t N, std::int64_t j);

// Reduce sum_k counts[k] * zeta_N^k. Exponential sums accumulate integer
// tallies per root exponent and reduce once, instead of adding term by term.
Cyclotomic from_power_counts(std::int64_t N, const std::vector<std::int64_t>& counts);

Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic scale(const Cyclotomic& a, const BigRat& q);
Cyclotomic pow(const Cyclotomic& a, std::int64_t r);

// Value-preserving map into Q(zeta_M); requires level(a) | M.
Cyclotomic embed(const Cyclotomic& a, std::int64_t M);

// Complex conjugation, zeta_N -> zeta_N^{N-1}.
Cyclotomic conj(const Cyclotomic& a);

// a * conj(a); real-valued, equal to |a|^2.
Cyclotomic norm_sq(const Cyclotomic& a);

// The rational value when all higher basis coordinates vanish, else nullopt.
std::optional<BigRat> as_rational(const Cyclotomic& a);

// Double evaluation at zeta_N = exp(2*pi*i/N). For inequality checks only.
std::complex<double> to_complex(const Cyclotomic& a);

inline Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b); }
inline Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return mul(a, b); }
inline Cyclotomic operator-(const Cyclotomic& a) { return scale(a, BigRat(-1)); }
inline Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return add(a, -b); }
inline bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

}  // namespace cyclosum
