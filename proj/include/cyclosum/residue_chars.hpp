#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cyclosum/cyclotomic.hpp"

namespace cyclosum {

// Additive character x -> zeta_n^{a x} on Z_n, determined by the multiplier a.
struct AddChar {
  std::int64_t modulus;
  std::int64_t multiplier;

  // n / gcd(a, n), the order of the character in the dual group.
  std::int64_t order() const;
};

std::int64_t add_char_exponent(const AddChar& lambda, std::int64_t x);
Cyclotomic add_char_eval(const AddChar& lambda, std::int64_t x);

struct UnitGroupGen {
  std::int64_t gen;    // residue mod the full modulus
  std::int64_t order;  // multiplicative order of gen
};

// Canonical decomposition of (Z/n)^* as a product of cyclic groups.
// Prime-power blocks in ascending prime order; odd p^m contributes one
// generator (the smallest primitive root, adjusted to stay primitive for all
// powers), 2 contributes none, 4 contributes (3, 2), and 2^m for m >= 3
// contributes (2^m - 1, 2) then (3, 2^{m-2}). Local generators are lifted to
// residues mod n that are 1 modulo the complementary factor.
struct UnitGroupStructure {
  std::int64_t modulus;
  std::vector<UnitGroupGen> gens;
};

UnitGroupStructure unit_group_structure(std::int64_t n);

namespace detail {
struct UnitGroupData;  // cached generators + discrete log tables per modulus
std::shared_ptr<const detail::UnitGroupData> unit_group_data(std::int64_t n);
}  // namespace detail

// Root-of-unity value: zeta_level ^ exponent.
struct RootValue {
  std::int64_t level;
  std::int64_t exponent;
};

// Multiplicative character of Z_n, stored as one exponent per canonical
// generator; defined on units only. Copies share the per-modulus tables.
class MultChar {
 public:
  MultChar(std::int64_t n, std::vector<std::int64_t> exponents);

  std::int64_t modulus() const;
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  bool is_trivial() const;
  std::int64_t order() const;

  // Value as a root of unity at the unit-group exponent level; nullopt when
  // gcd(x, n) > 1. Cheap: table lookups only.
  std::optional<RootValue> eval_root(std::int64_t x) const;
  // Throws NonUnitError off the unit group; characters are not extended by 0.
  Cyclotomic eval(std::int64_t x) const;

 private:
  std::vector<std::int64_t> exps_;
  std::shared_ptr<const detail::UnitGroupData> group_;
};

MultChar trivial_char(std::int64_t n);

// Index <-> character bijection on [0, phi(n)): mixed-radix over the
// generator orders, last exponent fastest; index 0 is the trivial character.
MultChar char_from_index(std::int64_t n, std::int64_t index);
std::int64_t char_index(const MultChar& chi);
std::vector<MultChar> enumerate_mult_chars(std::int64_t n);

// Smallest f | n such that chi is trivial on units congruent to 1 mod f.
std::int64_t conductor(const MultChar& chi);

// Push chi down to modulus m (m | chi.modulus(), conductor(chi) | m): the
// unique character chi' mod m with chi'(c mod m) = chi(c) for units c of the
// larger modulus. Throws ConductorError when the precondition fails.
MultChar induce_char(const MultChar& chi, std::int64_t m);

}  // namespace cyclosum
