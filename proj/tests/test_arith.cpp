#include <numeric>
#include <random>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"
#include "doctest.h"

using namespace cyclosum;

TEST_CASE("factorize basics") {
  auto f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});

  CHECK(factorize(1).factors.empty());

  auto f49 = factorize(49);
  REQUIRE(f49.factors.size() == 1);
  CHECK(f49.factors[0] == PrimePower{7, 2});

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-6), std::invalid_argument);
}

TEST_CASE("factorize reassembles and orders primes") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    auto fac = factorize(n);
    std::int64_t prod = 1, last_p = 1;
    for (const auto& pp : fac.factors) {
      CHECK(pp.prime > last_p);
      CHECK(is_prime(pp.prime));
      last_p = pp.prime;
      prod *= pp.value();
    }
    CHECK(prod == n);
  }
}

TEST_CASE("euler_phi examples and brute count") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(8) == 4);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t count = 0;
    for (std::int64_t x = 1; x <= n; ++x)
      if (std::gcd(x, n) == 1) ++count;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("euler_phi product identity up to 10^4") {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    // n * prod (1 - 1/p) stays integral factor by factor when grouped as
    // (p-1) * p^{m-1} per prime power.
    std::int64_t expect = 1;
    for (const auto& pp : factorize(n).factors) expect *= (pp.prime - 1) * (pp.value() / pp.prime);
    CHECK(euler_phi(n) == expect);
  }
}

TEST_CASE("moebius examples and divisor-sum identity") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  for (std::int64_t n = 1; n <= 10000; ++n) {
    int sum = 0;
    for (std::int64_t d : divisors(n)) sum += moebius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisors ascending") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors(9) == std::vector<std::int64_t>{1, 3, 9});
}

namespace {

// Ordered r-tuples with product n, counted by direct recursion.
std::int64_t count_ordered_factorizations(std::int64_t n, std::int64_t r) {
  if (r == 1) return 1;
  std::int64_t total = 0;
  for (std::int64_t d : divisors(n)) total += count_ordered_factorizations(n / d, r - 1);
  return total;
}

}  // namespace

TEST_CASE("divisor_count_r against tuple enumeration") {
  CHECK(divisor_count_r(12, 2) == count_ordered_factorizations(12, 2));
  CHECK(divisor_count_r(12, 2) == 6);
  CHECK(divisor_count_r(1, 5) == 1);
  CHECK(divisor_count_r(8, 3) == count_ordered_factorizations(8, 3));
  CHECK(divisor_count_r(8, 3) == 10);
  for (std::int64_t n = 1; n <= 1000; ++n) {
    CHECK(divisor_count_r(n, 1) == 1);
    CHECK(divisor_count_r(n, 2) == BigInt(divisors(n).size()));
  }
  for (std::int64_t n : {30, 36, 64, 97}) {
    for (std::int64_t r = 1; r <= 4; ++r)
      CHECK(divisor_count_r(n, r) == count_ordered_factorizations(n, r));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  for (std::int64_t n : {2, 5, 12, 97}) CHECK(mod_inverse(1, n) == 1);
  CHECK(mod_inverse(0, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(2, 4), NonUnitError);
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t x : units_mod(n)) {
      CHECK(mul_mod(x, mod_inverse(x, n), n) == 1 % n);
    }
  }
}

TEST_CASE("crt_multipliers examples") {
  auto e15 = crt_multipliers(factorize(15));
  CHECK(e15 == std::vector<std::int64_t>{10, 6});
  auto e4 = crt_multipliers(factorize(4));
  CHECK(e4 == std::vector<std::int64_t>{1});
  auto e6 = crt_multipliers(factorize(6));
  CHECK(e6 == std::vector<std::int64_t>{3, 4});
}

TEST_CASE("crt_multipliers congruences up to 500") {
  for (std::int64_t n = 2; n <= 500; ++n) {
    auto fac = factorize(n);
    auto es = crt_multipliers(fac);
    REQUIRE(es.size() == fac.factors.size());
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
      CHECK(es[i] >= 0);
      CHECK(es[i] < n);
      for (std::size_t j = 0; j < es.size(); ++j) {
        const std::int64_t q = fac.factors[j].value();
        CHECK(es[i] % q == (i == j ? 1 % q : 0));
      }
      sum = (sum + es[i]) % n;
    }
    CHECK(sum == 1 % n);
  }
}

TEST_CASE("mul_mod and pow_mod against big-integer arithmetic") {
  std::mt19937_64 rng(20260815);
  for (int it = 0; it < 2000; ++it) {
    const std::int64_t n = static_cast<std::int64_t>(rng() % 4000000000000000000ULL) + 1;
    const std::int64_t a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    const std::int64_t b = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    CHECK(BigInt(mul_mod(a, b, n)) == BigInt(a) * b % n);
  }
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(pow_mod(0, 0, 1) == 0);  // 1 mod 1
  for (int it = 0; it < 200; ++it) {
    const std::int64_t n = static_cast<std::int64_t>(rng() % 100000) + 1;
    const std::int64_t b = static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t e = static_cast<std::int64_t>(rng() % 50);
    BigInt expect = 1;
    for (std::int64_t k = 0; k < e; ++k) expect = expect * b % n;
    CHECK(BigInt(pow_mod(b, e, n)) == expect);
  }
}

TEST_CASE("units_mod") {
  CHECK(units_mod(1) == std::vector<std::int64_t>{0});
  CHECK(units_mod(12) == std::vector<std::int64_t>{1, 5, 7, 11});
  for (std::int64_t n = 1; n <= 300; ++n)
    CHECK(units_mod(n).size() == static_cast<std::size_t>(euler_phi(n)));
}
