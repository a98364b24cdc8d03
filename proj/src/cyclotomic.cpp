#include "cyclosum/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "cyclosum/arith.hpp"

namespace cyclosum {

namespace {

std::atomic<std::int64_t> g_level_ceiling{10000};

struct LevelData {
  std::int64_t phi;
  std::vector<BigInt> poly;      // Phi_N, ascending, monic
  std::vector<BigRat> poly_rat;  // same coefficients as rationals (reduction)
};

std::mutex g_cache_mutex;
std::map<std::int64_t, std::shared_ptr<const LevelData>> g_cache;

// Exact division of a monic-divisor polynomial product: num /= div, both
// ascending. Assumes the division is exact (cyclotomic factor structure).
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& div) {
  const std::size_t dn = num.size() - 1;
  const std::size_t dd = div.size() - 1;
  std::vector<BigInt> quot(dn - dd + 1);
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    BigInt c = num[k + dd];  // div is monic
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * div[j];
  }
  return quot;
}

std::vector<BigInt> compute_poly(std::int64_t N);

const LevelData& level_data(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
  if (N > g_level_ceiling.load()) {
    throw std::invalid_argument("cyclotomic level " + std::to_string(N) +
                                " exceeds level ceiling " +
                                std::to_string(g_level_ceiling.load()));
  }
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    auto it = g_cache.find(N);
    if (it != g_cache.end()) return *it->second;
  }
  auto data = std::make_shared<LevelData>();
  data->phi = euler_phi(N);
  data->poly = compute_poly(N);
  data->poly_rat.reserve(data->poly.size());
  for (const BigInt& c : data->poly) data->poly_rat.emplace_back(c);
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  auto [it, inserted] = g_cache.emplace(N, std::move(data));
  (void)inserted;
  return *it->second;
}

std::vector<BigInt> compute_poly(std::int64_t N) {
  if (N == 1) return {BigInt(-1), BigInt(1)};  // x - 1
  const Factorization fac = factorize(N);
  std::int64_t rad = 1;
  for (const auto& pp : fac.factors) rad *= pp.prime;
  if (rad != N) {
    // Phi_N(x) = Phi_rad(x^{N/rad})
    const std::vector<BigInt>& base = level_data(rad).poly;
    const std::int64_t k = N / rad;
    std::vector<BigInt> out(static_cast<std::size_t>((base.size() - 1) * k + 1));
    for (std::size_t j = 0; j < base.size(); ++j) out[j * k] = base[j];
    return out;
  }
  // Squarefree N: divide x^N - 1 by Phi_d for all proper divisors d.
  std::vector<BigInt> poly(static_cast<std::size_t>(N) + 1);
  poly.front() = -1;
  poly.back() = 1;
  for (std::int64_t d : divisors(N)) {
    if (d == N) continue;
    poly = divide_exact(std::move(poly), level_data(d).poly);
  }
  return poly;
}

// In-place reduction of power coefficients (length exactly N) mod Phi_N;
// returns the canonical phi(N)-vector. Synthetic division from the top,
// skipping zero coefficients, so sparse inputs stay cheap.
std::vector<BigRat> reduce_power_coeffs(std::int64_t N, std::vector<BigRat> acc) {
  const LevelData& ld = level_data(N);
  const std::size_t phi = static_cast<std::size_t>(ld.phi);
  const std::vector<BigRat>& div = ld.poly_rat;
  const std::size_t dd = div.size() - 1;  // == phi
  for (std::size_t k = acc.size(); k-- > phi;) {
    if (acc[k] == 0) continue;
    BigRat c = std::move(acc[k]);
    acc[k] = 0;
    const std::size_t base = k - dd;
    for (std::size_t j = 0; j < dd; ++j) {
      if (div[j] != 0) acc[base + j] -= c * div[j];
    }
  }
  acc.resize(phi);
  return acc;
}

}  // namespace

std::int64_t level_ceiling() { return g_level_ceiling.load(); }

void set_level_ceiling(std::int64_t ceiling) {
  if (ceiling < 1) throw std::invalid_argument("level ceiling must be >= 1");
  g_level_ceiling.store(ceiling);
}

const std::vector<BigInt>& cyclotomic_poly(std::int64_t N) { return level_data(N).poly; }

Cyclotomic::Cyclotomic() : level_(1), coeffs_(1, BigRat(0)) {}

Cyclotomic::Cyclotomic(const BigRat& q) : level_(1), coeffs_(1, q) {}

Cyclotomic::Cyclotomic(std::int64_t level, std::vector<BigRat> canonical)
    : level_(level), coeffs_(std::move(canonical)) {}

Cyclotomic Cyclotomic::zero(std::int64_t level) {
  return Cyclotomic(level, std::vector<BigRat>(static_cast<std::size_t>(level_data(level).phi)));
}

Cyclotomic Cyclotomic::one(std::int64_t level) {
  auto c = std::vector<BigRat>(static_cast<std::size_t>(level_data(level).phi));
  c[0] = 1;
  return Cyclotomic(level, std::move(c));
}

Cyclotomic Cyclotomic::from_power_coeffs(std::int64_t N, std::vector<BigRat> coeffs) {
  std::vector<BigRat> acc(static_cast<std::size_t>(N));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    acc[k % static_cast<std::size_t>(N)] += coeffs[k];
  }
  return Cyclotomic(N, reduce_power_coeffs(N, std::move(acc)));
}

bool Cyclotomic::is_zero() const {
  for (const BigRat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Cyclotomic cyc_root(std::int64_t N, std::int64_t j) {
  if (N < 1) throw std::invalid_argument("root order must be >= 1");
  j %= N;
  if (j < 0) j += N;
  std::vector<BigRat> acc(static_cast<std::size_t>(N));
  acc[static_cast<std::size_t>(j)] = 1;
  return Cyclotomic::from_power_coeffs(N, std::move(acc));
}

Cyclotomic from_power_counts(std::int64_t N, const std::vector<std::int64_t>& counts) {
  std::vector<BigRat> acc(static_cast<std::size_t>(N));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) acc[k % static_cast<std::size_t>(N)] += counts[k];
  }
  return Cyclotomic::from_power_coeffs(N, std::move(acc));
}

Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) {
  const std::int64_t L = lcm64(a.level(), b.level());
  const std::int64_t ka = L / a.level();
  const std::int64_t kb = L / b.level();
  std::vector<BigRat> acc(static_cast<std::size_t>(L));
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != 0) acc[i * static_cast<std::size_t>(ka)] += ca[i];
  for (std::size_t j = 0; j < cb.size(); ++j)
    if (cb[j] != 0) acc[j * static_cast<std::size_t>(kb)] += cb[j];
  return Cyclotomic::from_power_coeffs(L, std::move(acc));
}

Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) {
  const std::int64_t L = lcm64(a.level(), b.level());
  const std::uint64_t ka = static_cast<std::uint64_t>(L / a.level());
  const std::uint64_t kb = static_cast<std::uint64_t>(L / b.level());
  const std::uint64_t uL = static_cast<std::uint64_t>(L);
  std::vector<BigRat> acc(static_cast<std::size_t>(L));
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    const std::uint64_t ei = i * ka % uL;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      acc[(ei + j * kb) % uL] += ca[i] * cb[j];
    }
  }
  return Cyclotomic::from_power_coeffs(L, std::move(acc));
}

Cyclotomic scale(const Cyclotomic& a, const BigRat& q) {
  std::vector<BigRat> c = a.coeffs();
  for (BigRat& x : c) x *= q;
  // Scaling preserves canonical form at the same level.
  return Cyclotomic::from_power_coeffs(a.level(), std::move(c));
}

Cyclotomic pow(const Cyclotomic& a, std::int64_t r) {
  if (r < 0) throw std::invalid_argument("negative cyclotomic power");
  Cyclotomic out = Cyclotomic::one();
  Cyclotomic base = a;
  while (r > 0) {
    if (r & 1) out = mul(out, base);
    r >>= 1;
    if (r > 0) base = mul(base, base);
  }
  return out;
}

Cyclotomic embed(const Cyclotomic& a, std::int64_t M) {
  if (M % a.level() != 0) {
    throw std::invalid_argument("embed target level must be a multiple of the source level");
  }
  const std::size_t k = static_cast<std::size_t>(M / a.level());
  std::vector<BigRat> acc(static_cast<std::size_t>(M));
  const auto& ca = a.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != 0) acc[i * k] = ca[i];
  return Cyclotomic::from_power_coeffs(M, std::move(acc));
}

Cyclotomic conj(const Cyclotomic& a) {
  const std::size_t N = static_cast<std::size_t>(a.level());
  std::vector<BigRat> acc(N);
  const auto& ca = a.coeffs();
  for (std::size_t j = 0; j < ca.size(); ++j)
    if (ca[j] != 0) acc[(N - j) % N] += ca[j];
  return Cyclotomic::from_power_coeffs(a.level(), std::move(acc));
}

Cyclotomic norm_sq(const Cyclotomic& a) { return mul(a, conj(a)); }

std::optional<BigRat> as_rational(const Cyclotomic& a) {
  const auto& c = a.coeffs();
  for (std::size_t j = 1; j < c.size(); ++j)
    if (c[j] != 0) return std::nullopt;
  return c[0];
}

std::complex<double> to_complex(const Cyclotomic& a) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(a.level());
  std::complex<double> out(0.0, 0.0);
  const auto& c = a.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const double ang = step * static_cast<double>(j);
    out += to_double(c[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level() == b.level()) return a.coeffs() == b.coeffs();
  const std::int64_t L = lcm64(a.level(), b.level());
  return embed(a, L).coeffs() == embed(b, L).coeffs();
}

}  // namespace cyclosum
