#include "cyclosum/matrix_groups.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cyclosum/arith.hpp"
#include "cyclosum/errors.hpp"
#include "cyclosum/numbers.hpp"

namespace cyclosum {

namespace {

void check_matrix_budget(std::int64_t r, std::int64_t n, std::int64_t budget) {
  if (r < 1 || n < 1) throw std::invalid_argument("matrix enumeration needs r >= 1 and n >= 1");
  const BigInt candidates = int_pow(BigInt(n), r * r);
  if (candidates > BigInt(budget)) {
    throw BudgetExceededError("enumerating " + candidates.str() + " matrices (r=" +
                              std::to_string(r) + ", n=" + std::to_string(n) +
                              ") exceeds budget " + std::to_string(budget));
  }
}

// Exact integer determinant by cofactor expansion along the first row.
BigInt det_cofactor(const std::vector<BigInt>& a, std::int64_t k) {
  if (k == 1) return a[0];
  if (k == 2) return a[0] * a[3] - a[1] * a[2];
  BigInt det = 0;
  std::vector<BigInt> minor(static_cast<std::size_t>((k - 1) * (k - 1)));
  for (std::int64_t col = 0; col < k; ++col) {
    if (a[static_cast<std::size_t>(col)] == 0) continue;
    std::size_t m = 0;
    for (std::int64_t i = 1; i < k; ++i)
      for (std::int64_t j = 0; j < k; ++j)
        if (j != col) minor[m++] = a[static_cast<std::size_t>(i * k + j)];
    const BigInt term = a[static_cast<std::size_t>(col)] * det_cofactor(minor, k - 1);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Fraction-free elimination: every division below is exact over the integers.
BigInt det_bareiss(std::vector<BigInt> a, std::int64_t k) {
  BigInt prev = 1;
  int sign = 1;
  for (std::int64_t piv = 0; piv + 1 < k; ++piv) {
    if (a[static_cast<std::size_t>(piv * k + piv)] == 0) {
      std::int64_t swap_row = -1;
      for (std::int64_t i = piv + 1; i < k; ++i)
        if (a[static_cast<std::size_t>(i * k + piv)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (std::int64_t j = 0; j < k; ++j)
        std::swap(a[static_cast<std::size_t>(piv * k + j)],
                  a[static_cast<std::size_t>(swap_row * k + j)]);
      sign = -sign;
    }
    const BigInt& pivot = a[static_cast<std::size_t>(piv * k + piv)];
    for (std::int64_t i = piv + 1; i < k; ++i) {
      for (std::int64_t j = piv + 1; j < k; ++j) {
        BigInt& cell = a[static_cast<std::size_t>(i * k + j)];
        cell = (cell * pivot - a[static_cast<std::size_t>(i * k + piv)] *
                                   a[static_cast<std::size_t>(piv * k + j)]) /
               prev;
      }
      a[static_cast<std::size_t>(i * k + piv)] = 0;
    }
    prev = pivot;
  }
  BigInt det = a[static_cast<std::size_t>((k - 1) * k + (k - 1))];
  if (sign < 0) det = -det;
  return det;
}

// Overflow-safe specializations for the enumeration hot loop. Entries are in
// [0, n) and the budget caps n^{r^2}, so these stay far inside int64.
std::int64_t det2_mod(const std::vector<std::int64_t>& e, std::int64_t n) {
  return (((e[0] * e[3] - e[1] * e[2]) % n) + n) % n;
}

std::int64_t det3_mod(const std::vector<std::int64_t>& e, std::int64_t n) {
  const std::int64_t d = e[0] * (e[4] * e[8] - e[5] * e[7]) -
                         e[1] * (e[3] * e[8] - e[5] * e[6]) +
                         e[2] * (e[3] * e[7] - e[4] * e[6]);
  return ((d % n) + n) % n;
}

std::int64_t det_entries_mod(const std::vector<std::int64_t>& e, std::int64_t r,
                             std::int64_t n) {
  if (r == 1) return e[0] % n;
  if (r == 2) return det2_mod(e, n);
  if (r == 3) return det3_mod(e, n);
  std::vector<BigInt> a(e.begin(), e.end());
  const BigInt det = r <= 4 ? det_cofactor(a, r) : det_bareiss(std::move(a), r);
  return static_cast<std::int64_t>(((det % n) + n) % n);
}

bool advance_entries(std::vector<std::int64_t>& e, std::int64_t n) {
  for (std::size_t i = e.size(); i-- > 0;) {
    if (++e[i] < n) return true;
    e[i] = 0;
  }
  return false;
}

std::int64_t for_each_matching(std::int64_t r, std::int64_t n, std::int64_t budget,
                               std::int64_t wanted_det_class,  // -1: any unit det
                               const std::function<void(const MatrixZn&)>& visit) {
  check_matrix_budget(r, n, budget);
  MatrixZn X{r, n, std::vector<std::int64_t>(static_cast<std::size_t>(r * r), 0)};
  std::int64_t count = 0;
  do {
    const std::int64_t d = det_entries_mod(X.entries, r, n);
    const bool keep = wanted_det_class < 0 ? std::gcd(d, n) == 1 : d == wanted_det_class;
    if (keep) {
      ++count;
      if (visit) visit(X);
    }
  } while (advance_entries(X.entries, n));
  return count;
}

}  // namespace

std::int64_t det_mod(const MatrixZn& X) {
  if (X.r < 1 || X.n < 1) throw std::invalid_argument("det_mod needs r >= 1 and n >= 1");
  return det_entries_mod(X.entries, X.r, X.n);
}

std::int64_t trace_mod(const MatrixZn& X) {
  std::int64_t t = 0;
  for (std::int64_t i = 0; i < X.r; ++i) t = (t + X.at(i, i)) % X.n;
  return t;
}

std::int64_t for_each_gl(std::int64_t r, std::int64_t n,
                         const std::function<void(const MatrixZn&)>& visit,
                         std::int64_t budget) {
  return for_each_matching(r, n, budget, -1, visit);
}

std::int64_t for_each_sl(std::int64_t r, std::int64_t n,
                         const std::function<void(const MatrixZn&)>& visit,
                         std::int64_t budget) {
  return for_each_matching(r, n, budget, 1 % n, visit);
}

BigInt gl_order_prime_power(std::int64_t r, std::int64_t p, std::int64_t m) {
  if (r < 1 || m < 1 || !is_prime(p))
    throw std::invalid_argument("gl_order_prime_power needs r >= 1, prime p, m >= 1");
  BigRat v(int_pow(BigInt(p), m * r * r));
  for (std::int64_t i = 1; i <= r; ++i) v *= one_minus_p_pow(p, i);
  return certified_integer(v, "|GL_" + std::to_string(r) + "(Z_" + std::to_string(p) + "^" +
                                  std::to_string(m) + ")|");
}

BigInt gl_order(std::int64_t r, std::int64_t n) {
  if (r < 1 || n < 1) throw std::invalid_argument("gl_order needs r >= 1 and n >= 1");
  BigRat v(int_pow(BigInt(n), r * r));
  for (const auto& pp : factorize(n).factors)
    for (std::int64_t i = 1; i <= r; ++i) v *= one_minus_p_pow(pp.prime, i);
  return certified_integer(v, "|GL_" + std::to_string(r) + "(Z_" + std::to_string(n) + ")|");
}

BigInt sl_order(std::int64_t r, std::int64_t n) {
  if (r < 1 || n < 1) throw std::invalid_argument("sl_order needs r >= 1 and n >= 1");
  BigRat v(int_pow(BigInt(n), r * r - 1));
  for (const auto& pp : factorize(n).factors)
    for (std::int64_t i = 2; i <= r; ++i) v *= one_minus_p_pow(pp.prime, i);
  return certified_integer(v, "|SL_" + std::to_string(r) + "(Z_" + std::to_string(n) + ")|");
}

DetTraceTable::DetTraceTable(std::int64_t r, std::int64_t n)
    : r_(r), n_(n), counts_(static_cast<std::size_t>(n * n), 0) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(r * r), 0);
  do {
    const std::int64_t d = det_entries_mod(e, r, n);
    std::int64_t t = 0;
    for (std::int64_t i = 0; i < r; ++i) t += e[static_cast<std::size_t>(i * r + i)];
    ++counts_[static_cast<std::size_t>(d * n + t % n)];
  } while (advance_entries(e, n));
}

std::shared_ptr<const DetTraceTable> DetTraceTable::get(std::int64_t r, std::int64_t n,
                                                        std::int64_t budget) {
  check_matrix_budget(r, n, budget);
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const DetTraceTable>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{r, n}];
  if (!slot) slot = std::shared_ptr<const DetTraceTable>(new DetTraceTable(r, n));
  return slot;
}

Cyclotomic gl_gauss_bruteforce(std::int64_t r, std::int64_t n, const MultChar& chi,
                               const AddChar& lambda, std::int64_t budget) {
  if (chi.modulus() != n || lambda.modulus != n)
    throw std::invalid_argument("character moduli must match the matrix modulus");
  const std::int64_t a = ((lambda.multiplier % n) + n) % n;
  const std::int64_t chi_level = chi.eval_root(n == 1 ? 0 : 1)->level;
  const std::int64_t L = lcm64(n, chi_level);
  std::vector<std::int64_t> tally(static_cast<std::size_t>(L), 0);
  if (r == 1) {
    // GL_1 is the unit group itself; no histogram needed.
    check_matrix_budget(r, n, budget);
    for (std::int64_t x : units_mod(n)) {
      const auto rv = chi.eval_root(x);
      const std::int64_t e =
          (rv->exponent * (L / rv->level) + mul_mod(a, x, n) * (L / n)) % L;
      ++tally[static_cast<std::size_t>(e)];
    }
    return from_power_counts(L, tally);
  }
  const auto table = DetTraceTable::get(r, n, budget);
  for (std::int64_t d = 0; d < n; ++d) {
    if (std::gcd(d, n) != 1) continue;
    const auto rv = chi.eval_root(d);
    const std::int64_t base = rv->exponent * (L / rv->level) % L;
    for (std::int64_t t = 0; t < n; ++t) {
      const std::int64_t c = table->count(d, t);
      if (c == 0) continue;
      const std::int64_t e = (base + mul_mod(a, t, n) * (L / n)) % L;
      tally[static_cast<std::size_t>(e)] += c;
    }
  }
  return from_power_counts(L, tally);
}

Cyclotomic sl_gauss_bruteforce(std::int64_t r, std::int64_t n, const AddChar& lambda,
                               std::int64_t budget) {
  if (lambda.modulus != n)
    throw std::invalid_argument("character modulus must match the matrix modulus");
  const std::int64_t a = ((lambda.multiplier % n) + n) % n;
  if (r == 1) return cyc_root(n, a);  // SL_1 = {1}
  const auto table = DetTraceTable::get(r, n, budget);
  std::vector<std::int64_t> tally(static_cast<std::size_t>(n), 0);
  for (std::int64_t t = 0; t < n; ++t)
    tally[static_cast<std::size_t>(mul_mod(a, t, n))] += table->count(1 % n, t);
  return from_power_counts(n, tally);
}

BigInt trace_count_bruteforce(std::int64_t r, std::int64_t n, std::int64_t beta,
                              std::int64_t budget) {
  const std::int64_t b = ((beta % n) + n) % n;
  if (r == 1) {
    check_matrix_budget(r, n, budget);
    return std::gcd(b, n) == 1 ? 1 : 0;
  }
  const auto table = DetTraceTable::get(r, n, budget);
  BigInt total = 0;
  for (std::int64_t d = 0; d < n; ++d) {
    if (std::gcd(d, n) != 1) continue;
    total += table->count(d, b);
  }
  return total;
}

}  // namespace cyclosum
