#include <algorithm>
#include <numeric>
#include <set>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/residue_chars.hpp"
#include "doctest.h"

using namespace cyclosum;

TEST_CASE("additive character evaluation") {
  CHECK(add_char_eval(AddChar{4, 1}, 2) == Cyclotomic(-1));
  CHECK(add_char_eval(AddChar{4, 2}, 3) == Cyclotomic(-1));  // exp(2*pi*i*6/4)
  for (std::int64_t n : {1, 2, 5, 12}) {
    for (std::int64_t a = 0; a < n; ++a) CHECK(add_char_eval(AddChar{n, a}, 0) == Cyclotomic(1));
  }
  CHECK(AddChar{12, 8}.order() == 3);
  CHECK(AddChar{12, 0}.order() == 1);
  CHECK(AddChar{12, 5}.order() == 12);
}

TEST_CASE("additive characters are homomorphisms") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      const AddChar lam{n, a};
      for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t y = 0; y < n; ++y) {
          CHECK(add_char_exponent(lam, x + y) ==
                (add_char_exponent(lam, x) + add_char_exponent(lam, y)) % n);
        }
      }
    }
  }
}

TEST_CASE("additive orthogonality") {
  // sum_{b in Z_n} lambda(b*x) = n*[x == 0] for every full-order lambda.
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t a : units_mod(n)) {
      const AddChar lam{n, a};
      for (std::int64_t x = 0; x < n; ++x) {
        std::vector<BigRat> acc(static_cast<std::size_t>(n));
        for (std::int64_t b = 0; b < n; ++b)
          acc[static_cast<std::size_t>(add_char_exponent(lam, b * x % n))] += 1;
        CHECK(Cyclotomic::from_power_coeffs(n, std::move(acc)) ==
              Cyclotomic(x == 0 ? n : 0));
      }
    }
  }
}

TEST_CASE("unit group structure examples") {
  CHECK(unit_group_structure(1).gens.empty());

  const auto g8 = unit_group_structure(8);
  REQUIRE(g8.gens.size() == 2);
  CHECK(g8.gens[0].gen == 7);
  CHECK(g8.gens[0].order == 2);
  CHECK(g8.gens[1].gen == 3);
  CHECK(g8.gens[1].order == 2);

  const auto g7 = unit_group_structure(7);
  REQUIRE(g7.gens.size() == 1);
  CHECK(g7.gens[0].gen == 3);
  CHECK(g7.gens[0].order == 6);
}

TEST_CASE("unit group structure is a valid decomposition") {
  for (std::int64_t n = 1; n <= 64; ++n) {
    const auto st = unit_group_structure(n);
    std::int64_t prod = 1;
    for (const auto& g : st.gens) {
      prod *= g.order;
      CHECK(std::gcd(g.gen, n) == 1);
      // Claimed order is the true multiplicative order.
      CHECK(pow_mod(g.gen, g.order, n) == 1 % n);
      for (const auto& pp : factorize(g.order).factors)
        CHECK(pow_mod(g.gen, g.order / pp.prime, n) != 1 % n);
    }
    CHECK(prod == euler_phi(n));
    // Exponent vectors cover every unit exactly once.
    std::set<std::int64_t> seen;
    std::vector<std::int64_t> exps(st.gens.size(), 0);
    while (true) {
      std::int64_t x = 1 % n;
      for (std::size_t i = 0; i < exps.size(); ++i)
        x = mul_mod(x, pow_mod(st.gens[i].gen, exps[i], n), n);
      CHECK(seen.insert(x).second);
      bool advanced = false;
      for (std::size_t i = exps.size(); i-- > 0;) {
        if (++exps[i] < st.gens[i].order) {
          advanced = true;
          break;
        }
        exps[i] = 0;
      }
      if (!advanced) break;
    }
    CHECK(seen.size() == static_cast<std::size_t>(euler_phi(n)));
    for (std::int64_t x : units_mod(n)) CHECK(seen.count(x) == 1);
  }
}

TEST_CASE("character enumeration") {
  const auto chars1 = enumerate_mult_chars(1);
  REQUIRE(chars1.size() == 1);
  CHECK(chars1[0].is_trivial());

  CHECK(enumerate_mult_chars(3).size() == 2);

  const auto chars8 = enumerate_mult_chars(8);
  REQUIRE(chars8.size() == 4);
  CHECK(chars8[0].is_trivial());
  for (const auto& chi : chars8) {
    for (std::int64_t x : units_mod(8)) {
      const auto q = as_rational(chi.eval(x));
      REQUIRE(q.has_value());
      CHECK((*q == 1 || *q == -1));
    }
  }

  // Distinct exponent vectors, and index round-trip.
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto chars = enumerate_mult_chars(n);
    CHECK(chars.size() == static_cast<std::size_t>(euler_phi(n)));
    std::set<std::vector<std::int64_t>> seen;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(chars.size()); ++i) {
      CHECK(seen.insert(chars[static_cast<std::size_t>(i)].exponents()).second);
      CHECK(char_index(chars[static_cast<std::size_t>(i)]) == i);
    }
  }
}

TEST_CASE("multiplicative character evaluation") {
  for (std::int64_t x : units_mod(12)) CHECK(trivial_char(12).eval(x) == Cyclotomic(1));
  const auto chars3 = enumerate_mult_chars(3);
  CHECK(chars3[1].eval(2) == Cyclotomic(-1));
  const auto chars4 = enumerate_mult_chars(4);
  CHECK_THROWS_AS(chars4[1].eval(2), NonUnitError);
}

TEST_CASE("characters are homomorphisms on units") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (const auto& chi : enumerate_mult_chars(n)) {
      for (std::int64_t x : units_mod(n)) {
        for (std::int64_t y : units_mod(n)) {
          const auto vx = chi.eval_root(x), vy = chi.eval_root(y);
          const auto vxy = chi.eval_root(mul_mod(x, y, n));
          REQUIRE(vxy.has_value());
          CHECK(vxy->exponent == (vx->exponent + vy->exponent) % vx->level);
        }
      }
    }
  }
}

TEST_CASE("multiplicative orthogonality") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (const auto& chi : enumerate_mult_chars(n)) {
      Cyclotomic sum(0);
      std::int64_t level = 1;
      std::vector<BigRat> acc;
      for (std::int64_t x : units_mod(n)) {
        const auto rv = chi.eval_root(x);
        REQUIRE(rv.has_value());
        if (acc.empty()) {
          level = rv->level;
          acc.assign(static_cast<std::size_t>(level), BigRat(0));
        }
        acc[static_cast<std::size_t>(rv->exponent)] += 1;
      }
      sum = Cyclotomic::from_power_coeffs(level, std::move(acc));
      CHECK(sum == Cyclotomic(chi.is_trivial() ? euler_phi(n) : 0));
    }
  }
}

TEST_CASE("conductor examples") {
  CHECK(conductor(trivial_char(12)) == 1);
  CHECK(conductor(enumerate_mult_chars(4)[1]) == 4);
  // chi mod 8 with chi(7) = 1, chi(3) = -1: exponents (0, 1).
  const MultChar chi8(8, {0, 1});
  REQUIRE(as_rational(chi8.eval(7)) == BigRat(1));
  REQUIRE(as_rational(chi8.eval(3)) == BigRat(-1));
  CHECK(conductor(chi8) == 8);

  std::multiset<std::int64_t> f8;
  for (const auto& chi : enumerate_mult_chars(8)) f8.insert(conductor(chi));
  CHECK(f8 == std::multiset<std::int64_t>{1, 4, 8, 8});

  std::multiset<std::int64_t> f5;
  for (const auto& chi : enumerate_mult_chars(5)) f5.insert(conductor(chi));
  CHECK(f5 == std::multiset<std::int64_t>{1, 5, 5, 5});
}

TEST_CASE("induce_char examples") {
  CHECK(induce_char(trivial_char(12), 3).is_trivial());

  // Lift a character mod 4 to mod 8 (the unique char mod 8 with matching
  // values on lifts), induce back down, and recover it.
  const MultChar chi4 = enumerate_mult_chars(4)[1];
  for (const auto& chi : enumerate_mult_chars(8)) {
    if (conductor(chi) != 4) continue;
    const MultChar back = induce_char(chi, 4);
    CHECK(back.exponents() == chi4.exponents());
  }

  CHECK_THROWS_AS(induce_char(enumerate_mult_chars(4)[1], 2), ConductorError);
  CHECK_THROWS_AS(induce_char(trivial_char(12), 5), ConductorError);
}

TEST_CASE("induced characters agree with direct evaluation") {
  for (std::int64_t n = 1; n <= 24; ++n) {
    for (const auto& chi : enumerate_mult_chars(n)) {
      const std::int64_t f = conductor(chi);
      for (std::int64_t m : divisors(n)) {
        if (m % f != 0) continue;
        const MultChar ind = induce_char(chi, m);
        CHECK(conductor(ind) == f);
        for (std::int64_t c : units_mod(n)) CHECK(ind.eval(c % m) == chi.eval(c));
      }
    }
  }
}
