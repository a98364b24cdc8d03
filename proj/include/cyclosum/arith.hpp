#pragma once

#include <cstdint>
#include <vector>

#include "cyclosum/numbers.hpp"

namespace cyclosum {

struct PrimePower {
  std::int64_t prime = 0;
  std::int64_t exponent = 0;

  std::int64_t value() const;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization n = p_1^{m_1} ... p_s^{m_s}, primes strictly increasing.
// factorize(1) has an empty factor list.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;
};

// Largest n accepted by factorize(). Trial division up to sqrt(n) stays cheap here.
inline constexpr std::int64_t kFactorizeCeiling = 10'000'000'000'000;  // 10^13

Factorization factorize(std::int64_t n);
bool is_prime(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);

// All divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// d_r(n): number of ordered factorizations of n into r factors,
// prod over p^m || n of binomial(m+r-1, m).
BigInt divisor_count_r(std::int64_t n, std::int64_t r);

// Inverse of x mod n; throws NonUnitError unless gcd(x, n) = 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t n);

// CRT idempotents e_i = w_i * n/q_i reduced mod n, one per prime-power factor:
// e_i = 1 mod q_i, e_i = 0 mod q_j (j != i), sum e_i = 1 mod n.
std::vector<std::int64_t> crt_multipliers(const Factorization& fac);

// (a * b) mod n without overflow.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t n);

// Residues in [0, n) coprime to n, ascending. units_mod(1) = {0}.
std::vector<std::int64_t> units_mod(std::int64_t n);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace cyclosum
