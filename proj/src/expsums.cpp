#include "cyclosum/expsums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"

namespace cyclosum {

GaussSumParams make_gauss_params(std::int64_t n, MultChar chi, std::int64_t a) {
  if (chi.modulus() != n) throw std::invalid_argument("character modulus mismatch");
  return GaussSumParams{n, std::move(chi), AddChar{n, ((a % n) + n) % n}};
}

namespace {

// Sum of chi(x) * zeta_n^{a x} over units x, tallied per root exponent at
// level lcm(n, character value level) and reduced once.
Cyclotomic gauss_core(std::int64_t n, const MultChar& chi, std::int64_t a) {
  const std::int64_t chi_level = chi.eval_root(1 % n == 0 ? 0 : 1)->level;
  const std::int64_t L = lcm64(n, chi_level);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(L));
  for (std::int64_t x : units_mod(n)) {
    const auto rv = chi.eval_root(x);
    const std::int64_t e = mul_mod(a, x, n);
    counts[static_cast<std::size_t>((rv->exponent * (L / rv->level) + e * (L / n)) % L)] += 1;
  }
  return from_power_counts(L, counts);
}

}  // namespace

Cyclotomic gauss_sum_direct(const GaussSumParams& p) {
  return gauss_core(p.n, p.chi, p.lambda.multiplier);
}

Cyclotomic gauss_sum_reduced(const GaussSumParams& p) {
  const std::int64_t n = p.n;
  const std::int64_t a = ((p.lambda.multiplier % n) + n) % n;
  const std::int64_t d = a == 0 ? n : std::gcd(a, n);
  const std::int64_t f = conductor(p.chi);
  const std::int64_t nd = n / d;
  if (nd % f != 0) return Cyclotomic(0);

  // Full-support reduction: G(Z_n, chi, lambda_a) = phi(n)/phi(n/d) *
  // conj(chi'(a/d)) * G(Z_{n/d}, chi', lambda_1) with chi' = chi mod n/d.
  const BigRat factor(euler_phi(n), euler_phi(nd));
  const MultChar chi_nd = induce_char(p.chi, nd);
  const std::int64_t a_red = (a / d) % nd;  // unit mod n/d (0 only when n/d = 1)
  const Cyclotomic unit_twist = conj(chi_nd.eval(a_red));

  // Primitive-multiplier sum via the conductor: with m = (n/d)/f,
  // G(Z_{n/d}, chi', lambda_1) = moebius(m) chi_f(m) G(Z_f, chi_f, lambda_1).
  const std::int64_t m = nd / f;
  Cyclotomic core(0);
  if (std::gcd(m, f) == 1) {
    const int mu = moebius(m);
    if (mu != 0) {
      const MultChar chi_f = induce_char(p.chi, f);
      const Cyclotomic base = gauss_core(f, chi_f, 1 % f);
      core = scale(mul(chi_f.eval(m % f), base), BigRat(mu));
    }
  }
  return scale(mul(unit_twist, core), factor);
}

Cyclotomic ramanujan_direct(std::int64_t n, std::int64_t k) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
  for (std::int64_t j : units_mod(n)) counts[static_cast<std::size_t>(mul_mod(j, k, n))] += 1;
  return from_power_counts(n, counts);
}

std::int64_t ramanujan_divisor(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  const std::int64_t kk = ((k % n) + n) % n;
  const std::int64_t g = kk == 0 ? n : std::gcd(kk, n);
  std::int64_t sum = 0;
  for (std::int64_t dd : divisors(g)) sum += dd * moebius(n / dd);
  return sum;
}

namespace {

void check_tuple_budget(std::int64_t r, std::int64_t n, std::int64_t budget) {
  const BigInt tuples = int_pow(BigInt(euler_phi(n)), r - 1);
  if (tuples > budget) {
    throw BudgetExceededError("kloosterman enumeration needs " + tuples.str() +
                              " tuples, budget " + std::to_string(budget));
  }
}

}  // namespace

Cyclotomic kloosterman_direct(std::int64_t r, std::int64_t n, const AddChar& lambda,
                              std::int64_t budget) {
  if (r < 1) throw std::invalid_argument("kloosterman rank must be >= 1");
  if (lambda.modulus != n) throw std::invalid_argument("character modulus mismatch");
  check_tuple_budget(r, n, budget);

  const std::vector<std::int64_t> units = units_mod(n);
  std::vector<std::int64_t> inv(static_cast<std::size_t>(n));
  for (std::int64_t u : units) inv[static_cast<std::size_t>(u)] = mod_inverse(u, n);

  const std::int64_t a = lambda.multiplier;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
  // Depth-first over (x_1 .. x_{r-1}); the last coordinate is forced.
  std::vector<std::size_t> idx(static_cast<std::size_t>(r - 1), 0);
  std::vector<std::int64_t> prod(static_cast<std::size_t>(r), 1 % n);
  std::vector<std::int64_t> sum(static_cast<std::size_t>(r), 0);
  while (true) {
    for (std::size_t depth = 0; depth + 1 < static_cast<std::size_t>(r); ++depth) {
      const std::int64_t x = units[idx[depth]];
      prod[depth + 1] = mul_mod(prod[depth], x, n);
      sum[depth + 1] = (sum[depth] + x) % n;
    }
    const std::int64_t last = inv[static_cast<std::size_t>(prod[static_cast<std::size_t>(r - 1)])];
    const std::int64_t total = (sum[static_cast<std::size_t>(r - 1)] + last) % n;
    counts[static_cast<std::size_t>(mul_mod(a, total, n))] += 1;

    bool advanced = false;
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < units.size()) {
        advanced = true;
        break;
      }
      idx[i] = 0;
    }
    if (!advanced) break;
  }
  return from_power_counts(n, counts);
}

Cyclotomic kloosterman_crt(std::int64_t r, std::int64_t n, const AddChar& lambda,
                           std::int64_t budget) {
  if (r < 1) throw std::invalid_argument("kloosterman rank must be >= 1");
  if (lambda.modulus != n) throw std::invalid_argument("character modulus mismatch");
  if (n == 1) return kloosterman_direct(r, 1, lambda, budget);

  const Factorization fac = factorize(n);
  const std::vector<std::int64_t> es = crt_multipliers(fac);
  const std::int64_t a = ((lambda.multiplier % n) + n) % n;
  Cyclotomic out(1);
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const std::int64_t q = fac.factors[i].value();
    // lambda(e_i x) for x mod q lives at level q: a e_i is divisible by n/q
    // because e_i vanishes modulo every other prime-power factor.
    const std::int64_t ae = mul_mod(a, es[i], n);
    if (ae % (n / q) != 0) throw std::logic_error("CRT multiplier lost divisibility");
    const std::int64_t a_local = ae / (n / q);
    out = mul(out, kloosterman_direct(r, q, AddChar{q, a_local}, budget));
  }
  return out;
}

double kloosterman_bound_smith(std::int64_t r, std::int64_t n) {
  return std::pow(static_cast<double>(n), static_cast<double>(r - 1) / 2.0) *
         to_double(divisor_count_r(n, r));
}

double kloosterman_bound_fisher(std::int64_t r, std::int64_t p, std::int64_t m) {
  if (!is_prime(p)) throw std::invalid_argument("fisher bound needs a prime");
  if (r < 1 || m < 1) throw std::invalid_argument("fisher bound needs r, m >= 1");
  const double pd = static_cast<double>(p);
  const double bulk = std::pow(pd, static_cast<double>(m) * static_cast<double>(r - 1) / 2.0);
  if (m == 1) return static_cast<double>(r) * std::pow(pd, static_cast<double>(r - 1) / 2.0);

  std::int64_t h = 0;
  for (std::int64_t rr = r; rr % p == 0; rr /= p) ++h;
  const std::int64_t v2 = p == 2 ? 1 : 0;

  if (h == 0) return static_cast<double>(r) * bulk;
  if (m >= 3 * h + 2 + 4 * v2) {
    // p^{v_p(2) - h/2} evaluated literally as a real exponent.
    return std::pow(pd, static_cast<double>(v2) - static_cast<double>(h) / 2.0) *
           static_cast<double>(r) * bulk;
  }
  // Cap uses ceil(m/2): the floor variant claims |K_3(Z_27)| <= 27, but the
  // sum genuinely reaches 3^{7/2}. With ceil the bound holds on the whole
  // verified range and stays sharp at (r=2, p=2, m=2) and (r=3, p=3, m=2).
  const std::int64_t capped = std::min(h, (m + 1) / 2 - 1 - v2);
  return std::pow(pd, static_cast<double>(v2 + capped)) *
         static_cast<double>(std::gcd(r, p - 1)) * bulk;
}

}  // namespace cyclosum
