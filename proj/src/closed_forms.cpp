#include "cyclosum/closed_forms.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"

namespace cyclosum {

namespace {

// prod over primes p | n with p not dividing cofactor, of
// prod_{i=i_start..r} (1-p^{-i}), each factor divided by (1-p^{-1}) when
// normalized is set.
BigRat local_density(std::int64_t n, std::int64_t cofactor, std::int64_t r,
                     std::int64_t i_start, bool normalized) {
  BigRat prod = 1;
  for (const auto& pp : factorize(n).factors) {
    if (cofactor % pp.prime == 0) continue;
    for (std::int64_t i = i_start; i <= r; ++i) {
      BigRat factor = one_minus_p_pow(pp.prime, i);
      if (normalized) factor /= one_minus_p_pow(pp.prime, 1);
      prod *= factor;
    }
  }
  return prod;
}

std::int64_t normalize_mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

void require_rank_modulus(std::int64_t r, std::int64_t n, const char* who) {
  if (r < 1 || n < 1) throw std::invalid_argument(std::string(who) + " needs r >= 1 and n >= 1");
}

// Local factor of the trace-count product at p: the density of trace-beta
// matrices relative to p^{m(r^2-1)}, which depends only on whether p | beta.
BigRat trace_local_factor(std::int64_t r, std::int64_t p, bool p_divides_beta) {
  BigRat prod = 1;
  for (std::int64_t i = 1; i <= r; ++i) prod *= one_minus_p_pow(p, i);
  BigRat corr = rat_pow(BigRat(p), -(r * (r + 1) / 2));
  if (r % 2 != 0) corr = -corr;
  return p_divides_beta ? BigRat(prod + corr * (p - 1)) : BigRat(prod - corr);
}

}  // namespace

GLSumBreakdown gl_gauss_closed(std::int64_t r, std::int64_t n, const MultChar& chi,
                               const AddChar& lambda) {
  require_rank_modulus(r, n, "gl_gauss_closed");
  const auto params = make_gauss_params(n, chi, lambda.multiplier);
  const std::int64_t a = params.lambda.multiplier;
  const std::int64_t d = std::gcd(a, n);  // a = 0 gives d = n
  GLSumBreakdown out;
  out.n = n;
  out.r = r;
  out.d = d;
  out.f = conductor(chi);
  out.base_sum = gauss_sum_reduced(params);
  out.scalar_prefactor = rat_pow(BigRat(n), r * (r - 1) / 2) *
                         rat_pow(BigRat(d), r * (r - 1) / 2) *
                         local_density(n, n / d, r, 1, true);
  out.value = scale(pow(out.base_sum, r), out.scalar_prefactor);
  return out;
}

Cyclotomic gl_gauss_factored(std::int64_t r, std::int64_t n, const MultChar& chi,
                             const AddChar& lambda) {
  require_rank_modulus(r, n, "gl_gauss_factored");
  const std::int64_t a = normalize_mod(lambda.multiplier, n);
  const std::int64_t d = std::gcd(a, n);  // a = 0 gives d = n
  const std::int64_t f = conductor(chi);
  if ((n / d) % f != 0) return Cyclotomic::zero();
  const MultChar dropped = induce_char(chi, n / d);
  const Cyclotomic base = gauss_sum_reduced(make_gauss_params(n / d, dropped, a / d));
  const BigRat pref = rat_pow(BigRat(n), r * (r - 1) / 2) *
                      rat_pow(BigRat(d), r * (r + 1) / 2) *
                      local_density(n, n / d, r, 1, false);
  return scale(pow(base, r), pref);
}

BigRat gl_gauss_magnitude(std::int64_t r, std::int64_t n, const MultChar& chi,
                          const AddChar& lambda) {
  require_rank_modulus(r, n, "gl_gauss_magnitude");
  const std::int64_t a = normalize_mod(lambda.multiplier, n);
  const std::int64_t d = std::gcd(a, n);  // a = 0 gives d = n
  const std::int64_t f = conductor(chi);
  if ((n / d) % f != 0) return BigRat(0);
  const std::int64_t rest = n / (d * f);
  if (moebius(rest) == 0) return BigRat(0);
  if (std::gcd(rest, f) != 1) return BigRat(0);
  const BigRat real_part = rat_pow(BigRat(n), r * (r - 1) / 2) *
                           rat_pow(BigRat(d), r * (r + 1) / 2) *
                           local_density(n, n / d, r, 1, false);
  return real_part * real_part * rat_pow(BigRat(f), r);
}

Cyclotomic sl_gauss_closed(std::int64_t r, std::int64_t n, const AddChar& lambda,
                           std::int64_t budget) {
  require_rank_modulus(r, n, "sl_gauss_closed");
  const std::int64_t a = normalize_mod(lambda.multiplier, n);
  const std::int64_t d = std::gcd(a, n);  // a = 0 gives d = n
  const std::int64_t order = n / d;
  const AddChar primitive{order, (a / d) % order};
  const Cyclotomic kloosterman = kloosterman_crt(r, order, primitive, budget);
  const BigRat pref = rat_pow(BigRat(n), r * (r - 1) / 2) *
                      rat_pow(BigRat(d), r * (r + 1) / 2 - 1) *
                      local_density(n, order, r, 2, false);
  return scale(kloosterman, pref);
}

BigInt trace_count_divisor_sum(std::int64_t r, std::int64_t n, std::int64_t beta) {
  require_rank_modulus(r, n, "trace_count_divisor_sum");
  const std::int64_t b = normalize_mod(beta, n);
  const std::int64_t l = std::gcd(b, n);  // beta = 0 gives l = n
  BigRat sum = 0;
  for (std::int64_t d : divisors(n)) {
    BigRat term = BigRat(ramanujan_divisor(n / l, d));
    term *= rat_pow(BigRat(ramanujan_divisor(n, d)), r);
    term *= euler_phi(n / d);
    term *= rat_pow(BigRat(d), r * (r - 1) / 2);
    term *= local_density(n, n / d, r, 1, true);
    sum += term;
  }
  const BigRat value =
      sum * rat_pow(BigRat(n), r * (r - 1) / 2 - 1) / euler_phi(n / l);
  return certified_integer(value, "trace count (divisor sum) at n=" + std::to_string(n) +
                                      ", r=" + std::to_string(r) +
                                      ", beta=" + std::to_string(b));
}

BigInt trace_count_prime_power(std::int64_t r, std::int64_t p, std::int64_t m,
                               std::int64_t beta) {
  if (r < 1 || m < 1 || !is_prime(p))
    throw std::invalid_argument("trace_count_prime_power needs r >= 1, prime p, m >= 1");
  const BigInt pm = int_pow(BigInt(p), m);
  BigInt b = ((BigInt(beta) % pm) + pm) % pm;
  const bool p_divides_beta = b % p == 0;  // true for beta = 0 as well
  const BigRat value =
      rat_pow(BigRat(p), m * (r * r - 1)) * trace_local_factor(r, p, p_divides_beta);
  return certified_integer(value, "trace count (prime power) at p=" + std::to_string(p) +
                                      "^" + std::to_string(m) + ", r=" + std::to_string(r));
}

BigInt trace_count_product(std::int64_t r, std::int64_t n, std::int64_t beta) {
  require_rank_modulus(r, n, "trace_count_product");
  const std::int64_t b = normalize_mod(beta, n);
  const std::int64_t l = std::gcd(b, n);  // beta = 0 gives l = n
  BigRat value = rat_pow(BigRat(n), r * r - 1);
  for (const auto& pp : factorize(n).factors)
    value *= trace_local_factor(r, pp.prime, l % pp.prime == 0);
  return certified_integer(value, "trace count (prime product) at n=" + std::to_string(n) +
                                      ", r=" + std::to_string(r) +
                                      ", beta=" + std::to_string(b));
}

}  // namespace cyclosum
