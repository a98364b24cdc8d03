#include "cyclosum/closed_forms.hpp"

#include <numeric>
#include <vector>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/matrix_groups.hpp"
#include "doctest.h"

using namespace cyclosum;

TEST_CASE("GL closed form: pinned values") {
  // Nontrivial character mod 3, full-order additive character.
  const auto b1 = gl_gauss_closed(2, 3, char_from_index(3, 1), AddChar{3, 1});
  CHECK(b1.value == Cyclotomic(-9));
  CHECK(b1.d == 1);
  CHECK(b1.f == 3);

  // Trivial character mod 4 with a multiplier of gcd 2.
  const auto b2 = gl_gauss_closed(2, 4, trivial_char(4), AddChar{4, 2});
  CHECK(b2.value == Cyclotomic(32));
  CHECK(b2.d == 2);

  // Zero multiplier: the sum collapses to the group order.
  const auto b3 = gl_gauss_closed(2, 4, trivial_char(4), AddChar{4, 0});
  CHECK(b3.value == Cyclotomic(96));
  CHECK(as_rational(b3.value) == BigRat(gl_order(2, 4)));

  // Degenerate modulus: the group is trivial.
  CHECK(gl_gauss_closed(3, 1, trivial_char(1), AddChar{1, 0}).value == Cyclotomic(1));
}

TEST_CASE("GL closed form: breakdown invariant value = prefactor * base^r") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (const auto& chi : enumerate_mult_chars(n)) {
        for (std::int64_t a = 0; a < n; ++a) {
          const auto bd = gl_gauss_closed(r, n, chi, AddChar{n, a});
          CHECK(bd.value == scale(pow(bd.base_sum, r), bd.scalar_prefactor));
          CHECK(n % bd.d == 0);
          CHECK(n % bd.f == 0);
        }
      }
    }
  }
}

TEST_CASE("GL factored route: pinned values") {
  CHECK(gl_gauss_factored(2, 4, char_from_index(4, 1), AddChar{4, 2}) == Cyclotomic::zero());
  CHECK(gl_gauss_factored(2, 4, trivial_char(4), AddChar{4, 2}) == Cyclotomic(32));
  // r=1 with trivial character degenerates to a Ramanujan sum.
  CHECK(gl_gauss_factored(1, 6, trivial_char(6), AddChar{6, 1}) == Cyclotomic(1));
  CHECK(gl_gauss_factored(1, 6, trivial_char(6), AddChar{6, 1}) ==
        ramanujan_direct(6, 1));
}

TEST_CASE("GL routes agree on the full formula grid") {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (const auto& chi : enumerate_mult_chars(n)) {
        for (std::int64_t a = 0; a < n; ++a) {
          CHECK(gl_gauss_closed(r, n, chi, AddChar{n, a}).value ==
                gl_gauss_factored(r, n, chi, AddChar{n, a}));
        }
      }
    }
  }
}

TEST_CASE("GL closed form equals enumeration") {
  for (std::int64_t n = 2; n <= 8; ++n)
    for (const auto& chi : enumerate_mult_chars(n))
      for (std::int64_t a = 0; a < n; ++a)
        CHECK(gl_gauss_closed(2, n, chi, AddChar{n, a}).value ==
              gl_gauss_bruteforce(2, n, chi, AddChar{n, a}));
  for (std::int64_t n = 2; n <= 4; ++n)
    for (const auto& chi : enumerate_mult_chars(n))
      for (std::int64_t a = 0; a < n; ++a)
        CHECK(gl_gauss_closed(3, n, chi, AddChar{n, a}).value ==
              gl_gauss_bruteforce(3, n, chi, AddChar{n, a}));
  for (std::int64_t n = 1; n <= 24; ++n)
    for (const auto& chi : enumerate_mult_chars(n))
      for (std::int64_t a = 0; a < n; ++a)
        CHECK(gl_gauss_closed(1, n, chi, AddChar{n, a}).value ==
              gl_gauss_bruteforce(1, n, chi, AddChar{n, a}));
}

TEST_CASE("GL magnitude: pinned values") {
  CHECK(gl_gauss_magnitude(2, 3, char_from_index(3, 1), AddChar{3, 1}) == BigRat(81));
  // Primitive character mod 4: |G|^2 = conductor.
  CHECK(gl_gauss_magnitude(1, 4, char_from_index(4, 1), AddChar{4, 1}) == BigRat(4));
  // Conductor-8 character cannot survive at multiplier gcd 2.
  bool found_conductor8 = false;
  for (const auto& chi : enumerate_mult_chars(8)) {
    if (conductor(chi) != 8) continue;
    found_conductor8 = true;
    CHECK(gl_gauss_magnitude(1, 8, chi, AddChar{8, 2}) == BigRat(0));
  }
  CHECK(found_conductor8);
}

TEST_CASE("GL magnitude equals the norm of the closed form on the full grid") {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (const auto& chi : enumerate_mult_chars(n)) {
        for (std::int64_t a = 0; a < n; ++a) {
          const auto bd = gl_gauss_closed(r, n, chi, AddChar{n, a});
          CHECK(as_rational(norm_sq(bd.value)) == gl_gauss_magnitude(r, n, chi, AddChar{n, a}));
        }
      }
    }
  }
}

TEST_CASE("GL magnitude zero cases are exercised") {
  // f does not divide n/d; n/(df) not squarefree; gcd(n/(df), f) > 1.
  int nondividing = 0, nonsquarefree = 0, noncoprime = 0;
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (const auto& chi : enumerate_mult_chars(n)) {
      const std::int64_t f = conductor(chi);
      for (std::int64_t a = 0; a < n; ++a) {
        const std::int64_t d = std::gcd(a, n);
        if ((n / d) % f != 0)
          ++nondividing;
        else if (moebius(n / (d * f)) == 0)
          ++nonsquarefree;
        else if (std::gcd(n / (d * f), f) != 1)
          ++noncoprime;
        else
          continue;
        CHECK(gl_gauss_magnitude(2, n, chi, AddChar{n, a}) == BigRat(0));
      }
    }
  }
  CHECK(nondividing > 0);
  CHECK(nonsquarefree > 0);
  CHECK(noncoprime > 0);
}

TEST_CASE("SL closed form: pinned values") {
  CHECK(sl_gauss_closed(2, 3, AddChar{3, 1}) == Cyclotomic(-3));
  CHECK(sl_gauss_closed(2, 2, AddChar{2, 1}) == Cyclotomic(2));
  CHECK(sl_gauss_closed(2, 4, AddChar{4, 0}) == Cyclotomic(48));
  CHECK(as_rational(sl_gauss_closed(2, 4, AddChar{4, 0})) == BigRat(sl_order(2, 4)));
  CHECK(sl_gauss_closed(2, 1, AddChar{1, 0}) == Cyclotomic(1));
}

TEST_CASE("SL closed form equals enumeration") {
  for (std::int64_t n = 2; n <= 8; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      CHECK(sl_gauss_closed(2, n, AddChar{n, a}) == sl_gauss_bruteforce(2, n, AddChar{n, a}));
  for (std::int64_t n = 2; n <= 4; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      CHECK(sl_gauss_closed(3, n, AddChar{n, a}) == sl_gauss_bruteforce(3, n, AddChar{n, a}));
  for (std::int64_t n = 1; n <= 24; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      CHECK(sl_gauss_closed(1, n, AddChar{n, a}) == sl_gauss_bruteforce(1, n, AddChar{n, a}));
}

TEST_CASE("trace counts: pinned values") {
  CHECK(trace_count_divisor_sum(2, 2, 0) == 4);
  CHECK(trace_count_divisor_sum(2, 2, 1) == 2);
  CHECK(trace_count_divisor_sum(2, 3, 0) == 18);
  CHECK(trace_count_divisor_sum(2, 3, 1) == 15);
  CHECK(trace_count_divisor_sum(2, 4, 0) == 32);
  CHECK(trace_count_divisor_sum(1, 1, 0) == 1);

  CHECK(trace_count_prime_power(2, 2, 1, 0) == 4);
  CHECK(trace_count_prime_power(2, 2, 2, 0) == 32);
  CHECK(trace_count_prime_power(2, 3, 1, 1) == 15);
  CHECK_THROWS_AS(trace_count_prime_power(2, 6, 1, 0), std::invalid_argument);

  CHECK(trace_count_product(2, 6, 0) == 72);
  CHECK(trace_count_product(2, 6, 1) == 30);
  // The divisor classes of 6 cross-checked against the prime-power counts:
  // beta = 3 is 1 mod 2 and 0 mod 3, so the count is 2 * 18.
  CHECK(trace_count_product(2, 6, 3) == 36);
  CHECK(trace_count_product(2, 6, 3) ==
        trace_count_prime_power(2, 2, 1, 1) * trace_count_prime_power(2, 3, 1, 0));
  CHECK(trace_count_product(2, 6, 3) == trace_count_bruteforce(2, 6, 3));
  CHECK(trace_count_product(2, 6, 2) == 15 * 4);
  CHECK(trace_count_product(1, 1, 0) == 1);
}

TEST_CASE("trace counts: formulas agree with each other and the oracle") {
  struct Grid {
    std::int64_t r, max_n;
  };
  for (const Grid& g : {Grid{2, 8}, Grid{3, 4}, Grid{1, 8}}) {
    for (std::int64_t n = 1; n <= g.max_n; ++n) {
      for (std::int64_t b = 0; b < n; ++b) {
        const BigInt reference = trace_count_divisor_sum(g.r, n, b);
        CHECK(reference == trace_count_product(g.r, n, b));
        CHECK(reference == trace_count_bruteforce(g.r, n, b));
        const auto fac = factorize(n);
        if (fac.factors.size() == 1)
          CHECK(reference == trace_count_prime_power(g.r, fac.factors[0].prime,
                                                     fac.factors[0].exponent, b));
      }
    }
  }
}

TEST_CASE("trace counts depend only on gcd(beta, n)") {
  for (std::int64_t r = 1; r <= 3; ++r) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      std::vector<BigInt> counts;
      for (std::int64_t b = 0; b < n; ++b) counts.push_back(trace_count_divisor_sum(r, n, b));
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t b2 = b + 1; b2 < n; ++b2)
          if (std::gcd(b, n) == std::gcd(b2, n))
            CHECK(counts[static_cast<std::size_t>(b)] == counts[static_cast<std::size_t>(b2)]);
    }
  }
}

TEST_CASE("trace counts over a prime field: two-case specialization") {
  // For n = p the count takes exactly two values, fixed by whether p | beta.
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      BigRat prod = 1;
      for (std::int64_t i = 1; i <= r; ++i) prod *= one_minus_p_pow(p, i);
      BigRat corr = rat_pow(BigRat(p), -(r * (r + 1) / 2));
      if (r % 2 != 0) corr = -corr;
      const BigInt at_zero =
          certified_integer(rat_pow(BigRat(p), r * r - 1) * (prod + corr * (p - 1)),
                            "two-case spot check");
      const BigInt elsewhere = certified_integer(
          rat_pow(BigRat(p), r * r - 1) * (prod - corr), "two-case spot check");
      for (std::int64_t b = 0; b < p; ++b) {
        CHECK(trace_count_prime_power(r, p, 1, b) == (b == 0 ? at_zero : elsewhere));
        CHECK(trace_count_bruteforce(r, p, b) == (b == 0 ? at_zero : elsewhere));
      }
    }
  }
}

TEST_CASE("trace counts sum to the group order") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      BigInt total = 0;
      for (std::int64_t b = 0; b < n; ++b) total += trace_count_divisor_sum(r, n, b);
      CHECK(total == gl_order(r, n));
    }
  }
}
