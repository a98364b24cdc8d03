#include "cyclosum/residue_chars.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"

namespace cyclosum {

std::int64_t AddChar::order() const { return modulus / std::gcd(multiplier, modulus); }

std::int64_t add_char_exponent(const AddChar& lambda, std::int64_t x) {
  return mul_mod(lambda.multiplier, x, lambda.modulus);
}

Cyclotomic add_char_eval(const AddChar& lambda, std::int64_t x) {
  return cyc_root(lambda.modulus, add_char_exponent(lambda, x));
}

namespace {

// Smallest primitive root mod odd prime p, bumped by p if needed so that it
// stays primitive modulo every power of p.
std::int64_t primitive_root_all_powers(std::int64_t p) {
  const Factorization fac = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pp : fac.factors) {
      if (pow_mod(g, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (p - 1 > 0 && pow_mod(g % (p * p), p - 1, p * p) == 1) return g + p;
    return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

// Local generators of (Z/p^m)^* with their orders.
std::vector<UnitGroupGen> local_generators(const PrimePower& pp) {
  const std::int64_t q = pp.value();
  if (pp.prime == 2) {
    if (pp.exponent == 1) return {};
    if (pp.exponent == 2) return {{3, 2}};
    return {{q - 1, 2}, {3, q / 4}};
  }
  const std::int64_t g = primitive_root_all_powers(pp.prime) % q;
  return {{g, q / pp.prime * (pp.prime - 1)}};
}

}  // namespace

namespace detail {

struct UnitGroupData {
  std::int64_t modulus = 1;
  std::int64_t phi = 1;
  std::vector<UnitGroupGen> gens;
  std::int64_t exponent = 1;  // lcm of generator orders
  // dlog[x] lists the exponent of each generator for unit x; empty vector
  // slots mark non-units (units with no generators get a sentinel instead).
  std::vector<std::vector<std::int64_t>> dlog;
  std::vector<bool> is_unit;
};

namespace {

std::mutex g_group_mutex;
std::map<std::int64_t, std::shared_ptr<const UnitGroupData>> g_group_cache;

std::shared_ptr<const UnitGroupData> build_group(std::int64_t n) {
  auto data = std::make_shared<UnitGroupData>();
  data->modulus = n;
  data->phi = euler_phi(n);
  const Factorization fac = factorize(n);
  for (const auto& pp : fac.factors) {
    const std::int64_t q = pp.value();
    const std::int64_t rest = n / q;
    for (UnitGroupGen lg : local_generators(pp)) {
      // Lift to x = lg.gen mod q, x = 1 mod rest.
      std::int64_t lifted = lg.gen;
      if (rest > 1) {
        const std::int64_t inv = mod_inverse(rest % q, q);
        lifted = (mul_mod(mul_mod(((lg.gen - 1 + q) % q), inv, n), rest % n, n) + 1) % n;
      }
      data->gens.push_back({lifted, lg.order});
    }
  }
  for (const auto& g : data->gens) data->exponent = lcm64(data->exponent, g.order);

  data->dlog.assign(static_cast<std::size_t>(n), {});
  data->is_unit.assign(static_cast<std::size_t>(n), false);
  const std::size_t ng = data->gens.size();
  std::vector<std::int64_t> exps(ng, 0);
  std::int64_t x = 1 % n;
  std::int64_t count = 0;
  while (true) {
    data->dlog[static_cast<std::size_t>(x)] = exps;
    data->is_unit[static_cast<std::size_t>(x)] = true;
    ++count;
    // Odometer over exponent tuples, last generator fastest; multiply into
    // the running residue instead of recomputing powers. A digit that wraps
    // has contributed gen^order = 1, so x needs no correction.
    bool advanced = false;
    for (std::size_t i = ng; i-- > 0;) {
      ++exps[i];
      x = mul_mod(x, data->gens[i].gen, n);
      if (exps[i] < data->gens[i].order) {
        advanced = true;
        break;
      }
      exps[i] = 0;
    }
    if (!advanced) break;
  }
  if (count != data->phi) throw std::logic_error("unit group enumeration mismatch");
  return data;
}

}  // namespace

std::shared_ptr<const UnitGroupData> unit_group_data(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  {
    std::lock_guard<std::mutex> lk(g_group_mutex);
    auto it = g_group_cache.find(n);
    if (it != g_group_cache.end()) return it->second;
  }
  auto data = build_group(n);
  std::lock_guard<std::mutex> lk(g_group_mutex);
  return g_group_cache.emplace(n, std::move(data)).first->second;
}

}  // namespace detail

UnitGroupStructure unit_group_structure(std::int64_t n) {
  auto data = detail::unit_group_data(n);
  return {data->modulus, data->gens};
}

MultChar::MultChar(std::int64_t n, std::vector<std::int64_t> exponents)
    : exps_(std::move(exponents)), group_(detail::unit_group_data(n)) {
  if (exps_.size() != group_->gens.size()) {
    throw std::invalid_argument("character exponent count does not match the unit group");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::int64_t o = group_->gens[i].order;
    exps_[i] = ((exps_[i] % o) + o) % o;
  }
}

std::int64_t MultChar::modulus() const { return group_->modulus; }

bool MultChar::is_trivial() const {
  for (std::int64_t e : exps_)
    if (e != 0) return false;
  return true;
}

std::int64_t MultChar::order() const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::int64_t o = group_->gens[i].order;
    ord = lcm64(ord, o / std::gcd(o, exps_[i]));
  }
  return ord;
}

std::optional<RootValue> MultChar::eval_root(std::int64_t x) const {
  const std::int64_t n = group_->modulus;
  x = ((x % n) + n) % n;
  if (!group_->is_unit[static_cast<std::size_t>(x)]) return std::nullopt;
  const std::int64_t L = group_->exponent;
  const auto& dl = group_->dlog[static_cast<std::size_t>(x)];
  std::int64_t t = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    t = (t + mul_mod(mul_mod(exps_[i], dl[i], L), L / group_->gens[i].order, L)) % L;
  }
  return RootValue{L, t};
}

Cyclotomic MultChar::eval(std::int64_t x) const {
  auto rv = eval_root(x);
  if (!rv) {
    throw NonUnitError("character argument " + std::to_string(x) + " is not a unit mod " +
                       std::to_string(modulus()));
  }
  return cyc_root(rv->level, rv->exponent);
}

MultChar trivial_char(std::int64_t n) {
  return MultChar(n, std::vector<std::int64_t>(detail::unit_group_data(n)->gens.size(), 0));
}

MultChar char_from_index(std::int64_t n, std::int64_t index) {
  auto data = detail::unit_group_data(n);
  if (index < 0 || index >= data->phi) throw std::invalid_argument("character index out of range");
  std::vector<std::int64_t> exps(data->gens.size(), 0);
  for (std::size_t i = exps.size(); i-- > 0;) {
    exps[i] = index % data->gens[i].order;
    index /= data->gens[i].order;
  }
  return MultChar(n, std::move(exps));
}

std::int64_t char_index(const MultChar& chi) {
  auto data = detail::unit_group_data(chi.modulus());
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < data->gens.size(); ++i) {
    idx = idx * data->gens[i].order + chi.exponents()[i];
  }
  return idx;
}

std::vector<MultChar> enumerate_mult_chars(std::int64_t n) {
  const std::int64_t count = euler_phi(n);
  std::vector<MultChar> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(char_from_index(n, i));
  return out;
}

std::int64_t conductor(const MultChar& chi) {
  const std::int64_t n = chi.modulus();
  for (std::int64_t f : divisors(n)) {
    bool kernel_contains = true;
    for (std::int64_t x = 1; x <= n; ++x) {
      if (x % f != 1 % f) continue;
      auto rv = chi.eval_root(x);
      if (!rv) continue;
      if (rv->exponent != 0) {
        kernel_contains = false;
        break;
      }
    }
    if (kernel_contains) return f;
  }
  throw std::logic_error("conductor scan failed");  // unreachable: f = n always works
}

MultChar induce_char(const MultChar& chi, std::int64_t m) {
  const std::int64_t n = chi.modulus();
  if (m < 1 || n % m != 0) {
    throw ConductorError("induction target " + std::to_string(m) + " does not divide modulus " +
                         std::to_string(n));
  }
  if (m % conductor(chi) != 0) {
    throw ConductorError("conductor " + std::to_string(conductor(chi)) +
                         " does not divide induction target " + std::to_string(m));
  }
  auto data = detail::unit_group_data(m);
  std::vector<std::int64_t> exps;
  exps.reserve(data->gens.size());
  for (const auto& g : data->gens) {
    // Lift the generator to a unit of the larger modulus; some lift in
    // g + k*m, 0 <= k <= n/m, is always coprime to n.
    std::int64_t c = g.gen;
    while (std::gcd(c, n) != 1) {
      c += m;
      if (c > n + m) throw std::logic_error("no coprime lift found");
    }
    auto rv = chi.eval_root(c);
    // The lift has order dividing g.order modulo the conductor, so the value
    // is a g.order-th root of unity; the exponent conversion stays integral.
    if ((rv->exponent * g.order) % rv->level != 0) {
      throw std::logic_error("induced character exponent is not integral");
    }
    exps.push_back(rv->exponent * g.order / rv->level % g.order);
  }
  return MultChar(m, std::move(exps));
}

}  // namespace cyclosum
