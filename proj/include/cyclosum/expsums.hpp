#pragma once

#include <cstdint>

#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/residue_chars.hpp"

namespace cyclosum {

// Candidate cap shared by every exhaustive enumeration (unit tuples here,
// matrix entry vectors in the group oracles). Configurable via the CLI.
inline constexpr std::int64_t kDefaultBudget = 100'000'000;

struct GaussSumParams {
  std::int64_t n;
  MultChar chi;   // modulus n
  AddChar lambda;  // modulus n
};

GaussSumParams make_gauss_params(std::int64_t n, MultChar chi, std::int64_t a);

// G(Z_n, chi, lambda) = sum over units x of chi(x) lambda(x), by summation.
Cyclotomic gauss_sum_direct(const GaussSumParams& p);

// Same value through the reduction pipeline: strip gcd(a, n) down to a
// primitive-multiplier sum at modulus n/d, peel off conj(chi'(a')), then
// drop to conductor level, where only a direct sum over Z_f^* remains.
Cyclotomic gauss_sum_reduced(const GaussSumParams& p);

// Ramanujan sum C_n(k): sum of zeta_n^{jk} over units j.
Cyclotomic ramanujan_direct(std::int64_t n, std::int64_t k);

// C_n(k) = sum_{d | gcd(k, n)} d * moebius(n / d), with gcd(0, n) = n.
std::int64_t ramanujan_divisor(std::int64_t n, std::int64_t k);

// Hyper-Kloosterman sum K_r(Z_n, lambda): sum of lambda(x_1 + ... + x_r) over
// unit tuples with product 1. Enumerates phi(n)^{r-1} tuples; throws
// BudgetExceededError past the candidate budget.
Cyclotomic kloosterman_direct(std::int64_t r, std::int64_t n, const AddChar& lambda,
                              std::int64_t budget = kDefaultBudget);

// Same value as the product of prime-power-level sums with multipliers
// induced through the CRT idempotents.
Cyclotomic kloosterman_crt(std::int64_t r, std::int64_t n, const AddChar& lambda,
                           std::int64_t budget = kDefaultBudget);

// |K_r(Z_n, lambda)| <= n^{(r-1)/2} d_r(n) for lambda of full order n.
double kloosterman_bound_smith(std::int64_t r, std::int64_t n);

// Four-case prime-power bound for |K_r(Z_{p^m}, lambda)|, full-order lambda.
double kloosterman_bound_fisher(std::int64_t r, std::int64_t p, std::int64_t m);

}  // namespace cyclosum
