#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/expsums.hpp"
#include "cyclosum/residue_chars.hpp"

namespace cyclosum {

// r x r matrix over Z_n, entries row-major in [0, n).
struct MatrixZn {
  std::int64_t r;
  std::int64_t n;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::int64_t i, std::int64_t j) const {
    return entries[static_cast<std::size_t>(i * r + j)];
  }
};

// Determinant mod n: cofactor expansion over exact integers for r <= 4,
// fraction-free elimination above.
std::int64_t det_mod(const MatrixZn& X);
std::int64_t trace_mod(const MatrixZn& X);

// Visit every invertible (resp. determinant-1) matrix in lexicographic entry
// order; returns the number visited. All n^{r^2} candidates are scanned, so
// the budget bounds that count; BudgetExceededError past it.
std::int64_t for_each_gl(std::int64_t r, std::int64_t n,
                         const std::function<void(const MatrixZn&)>& visit,
                         std::int64_t budget = kDefaultBudget);
std::int64_t for_each_sl(std::int64_t r, std::int64_t n,
                         const std::function<void(const MatrixZn&)>& visit,
                         std::int64_t budget = kDefaultBudget);

// |GL_r(Z_{p^m})| = p^{m r^2} prod_{i=1..r} (1 - p^{-i}).
BigInt gl_order_prime_power(std::int64_t r, std::int64_t p, std::int64_t m);
// |GL_r(Z_n)| = n^{r^2} prod_{p|n} prod_{i=1..r} (1 - p^{-i}).
BigInt gl_order(std::int64_t r, std::int64_t n);
// |SL_r(Z_n)| = n^{r^2-1} prod_{p|n} prod_{i=2..r} (1 - p^{-i}).
BigInt sl_order(std::int64_t r, std::int64_t n);

// Histogram of (det, trace) over all r x r matrices mod n, built by one
// exhaustive pass and cached per (r, n); the enumeration oracles for the
// closed forms all read from it, so each grid pays the n^{r^2} scan once.
class DetTraceTable {
 public:
  static std::shared_ptr<const DetTraceTable> get(std::int64_t r, std::int64_t n,
                                                  std::int64_t budget = kDefaultBudget);

  std::int64_t count(std::int64_t det, std::int64_t trace) const {
    return counts_[static_cast<std::size_t>(det * n_ + trace)];
  }
  std::int64_t modulus() const { return n_; }

 private:
  DetTraceTable(std::int64_t r, std::int64_t n);
  std::int64_t r_, n_;
  std::vector<std::int64_t> counts_;  // n * n, [det * n + trace]
};

// Sum of chi(det X) lambda(tr X) over GL_r(Z_n), by enumeration.
Cyclotomic gl_gauss_bruteforce(std::int64_t r, std::int64_t n, const MultChar& chi,
                               const AddChar& lambda, std::int64_t budget = kDefaultBudget);

// Sum of lambda(tr X) over SL_r(Z_n), by enumeration.
Cyclotomic sl_gauss_bruteforce(std::int64_t r, std::int64_t n, const AddChar& lambda,
                               std::int64_t budget = kDefaultBudget);

// |{X in GL_r(Z_n) : tr X = beta}|, by enumeration.
BigInt trace_count_bruteforce(std::int64_t r, std::int64_t n, std::int64_t beta,
                              std::int64_t budget = kDefaultBudget);

}  // namespace cyclosum
