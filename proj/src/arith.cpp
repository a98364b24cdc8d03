#include "cyclosum/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclosum/errors.hpp"

namespace cyclosum {

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
  if (n > kFactorizeCeiling)
    throw std::invalid_argument("factorize: n exceeds ceiling " + std::to_string(kFactorizeCeiling));
  Factorization fac;
  fac.n = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    std::int64_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fac.factors.push_back({p, e});
  }
  if (m > 1) fac.factors.push_back({m, 1});
  return fac;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const Factorization fac = factorize(n);
  return fac.factors.size() == 1 && fac.factors[0].exponent == 1;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = 1;
  for (const auto& pp : factorize(n).factors)
    phi *= (pp.prime - 1) * (pp.value() / pp.prime);
  return phi;
}

int moebius(std::int64_t n) {
  const Factorization fac = factorize(n);
  for (const auto& pp : fac.factors)
    if (pp.exponent > 1) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> divs{1};
  for (const auto& pp : factorize(n).factors) {
    const std::size_t count = divs.size();
    std::int64_t pe = 1;
    for (std::int64_t e = 1; e <= pp.exponent; ++e) {
      pe *= pp.prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1, den = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

}  // namespace

BigInt divisor_count_r(std::int64_t n, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("divisor_count_r: r must be positive");
  BigInt count = 1;
  for (const auto& pp : factorize(n).factors)
    count *= binomial(pp.exponent + r - 1, pp.exponent);
  return count;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (n == 1) return 0;  // the unit 1 = 0 mod 1
  std::int64_t a = ((x % n) + n) % n;
  // Extended Euclid on (a, n).
  std::int64_t r0 = a, r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1)
    throw NonUnitError("mod_inverse: " + std::to_string(x) + " is not a unit mod " + std::to_string(n));
  return ((s0 % n) + n) % n;
}

std::vector<std::int64_t> crt_multipliers(const Factorization& fac) {
  std::vector<std::int64_t> es;
  es.reserve(fac.factors.size());
  for (const auto& pp : fac.factors) {
    const std::int64_t q = pp.value();
    const std::int64_t cof = fac.n / q;
    const std::int64_t w = mod_inverse(cof % q, q);
    es.push_back(mul_mod(cof % fac.n, w, fac.n));
  }
  return es;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t n) {
  std::int64_t r = 1 % n, b = ((base % n) + n) % n;
  for (std::int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) r = mul_mod(r, b, n);
    b = mul_mod(b, b, n);
  }
  return r;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("units_mod: modulus must be positive");
  if (n == 1) return {0};
  std::vector<std::int64_t> units;
  units.reserve(static_cast<std::size_t>(euler_phi(n)));
  for (std::int64_t x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) units.push_back(x);
  return units;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace cyclosum
