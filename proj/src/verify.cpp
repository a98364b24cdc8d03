#include "cyclosum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cyclosum/arith.hpp"
#include "cyclosum/closed_forms.hpp"
#include "cyclosum/json_io.hpp"
#include "cyclosum/matrix_groups.hpp"

namespace cyclosum {

namespace {

// Float bound checks allow this much slack over the exact inequality.
constexpr double kBoundSlack = 1e-9;

struct Cell {
  std::string params;
  std::function<std::optional<Mismatch>()> check;
};

std::optional<Mismatch> expect_equal(const std::string& params, const Cyclotomic& expected,
                                     const Cyclotomic& got) {
  if (expected == got) return std::nullopt;
  return Mismatch{params, to_exact_string(expected), to_exact_string(got)};
}

std::vector<Cell> gauss_cells(const VerifyOptions& o) {
  std::vector<Cell> cells;
  for (std::int64_t n = 1; n <= o.max_n; ++n) {
    for (const MultChar& chi : enumerate_mult_chars(n)) {
      const std::int64_t f = conductor(chi);
      for (std::int64_t a = 0; a < n; ++a) {
        std::string params = "gauss n=" + std::to_string(n) +
                             " chi=" + std::to_string(char_index(chi)) +
                             " a=" + std::to_string(a);
        cells.push_back({params, [=]() -> std::optional<Mismatch> {
          const auto p = make_gauss_params(n, chi, a);
          const Cyclotomic direct = gauss_sum_direct(p);
          if (auto m = expect_equal(params, direct, gauss_sum_reduced(p))) return m;
          // Primitive sums have squared magnitude exactly n.
          if (f == n && std::gcd(a, n) == 1) {
            const Cyclotomic sq = norm_sq(direct);
            if (sq != Cyclotomic(n))
              return Mismatch{params + " |G|^2", std::to_string(n), to_exact_string(sq)};
          }
          return std::nullopt;
        }});
      }
    }
  }
  return cells;
}

std::vector<Cell> ramanujan_cells(const VerifyOptions& o) {
  std::vector<Cell> cells;
  for (std::int64_t n = 1; n <= o.max_n; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      std::string params = "ramanujan n=" + std::to_string(n) + " k=" + std::to_string(k);
      cells.push_back({params, [=]() {
        return expect_equal(params, ramanujan_direct(n, k),
                            Cyclotomic(ramanujan_divisor(n, k)));
      }});
    }
  }
  return cells;
}

std::vector<Cell> kloosterman_cells(const VerifyOptions& o) {
  std::vector<Cell> cells;
  for (std::int64_t r = 1; r <= o.max_r; ++r) {
    for (std::int64_t n = 1; n <= o.max_n; ++n) {
      const auto fac = factorize(n);
      for (std::int64_t a = 0; a < n; ++a) {
        std::string params = "kloosterman r=" + std::to_string(r) +
                             " n=" + std::to_string(n) + " a=" + std::to_string(a);
        const std::int64_t budget = o.budget;
        cells.push_back({params, [=]() -> std::optional<Mismatch> {
          const AddChar lambda{n, a};
          const Cyclotomic direct = kloosterman_direct(r, n, lambda, budget);
          if (auto m = expect_equal(params, direct, kloosterman_crt(r, n, lambda, budget)))
            return m;
          if (std::gcd(a, n) == 1) {
            const double mag = std::abs(to_complex(direct));
            const double smith = kloosterman_bound_smith(r, n);
            if (mag > smith + kBoundSlack)
              return Mismatch{params + " smith-bound", "<= " + std::to_string(smith),
                              std::to_string(mag)};
            if (fac.factors.size() == 1) {
              const double fisher =
                  kloosterman_bound_fisher(r, fac.factors[0].prime, fac.factors[0].exponent);
              if (mag > fisher + kBoundSlack)
                return Mismatch{params + " fisher-bound", "<= " + std::to_string(fisher),
                                std::to_string(mag)};
            }
          }
          return std::nullopt;
        }});
      }
    }
  }
  return cells;
}

std::vector<Cell> gl_cells(const VerifyOptions& o) {
  std::vector<Cell> cells;
  for (std::int64_t r = 1; r <= o.max_r; ++r) {
    for (std::int64_t n = 1; n <= o.max_n; ++n) {
      for (const MultChar& chi : enumerate_mult_chars(n)) {
        for (std::int64_t a = 0; a < n; ++a) {
          std::string params = "gl r=" + std::to_string(r) + " n=" + std::to_string(n) +
                               " chi=" + std::to_string(char_index(chi)) +
                               " a=" + std::to_string(a);
          const std::int64_t budget = o.budget;
          cells.push_back({params, [=]() -> std::optional<Mismatch> {
            const AddChar lambda{n, a};
            const Cyclotomic closed = gl_gauss_closed(r, n, chi, lambda).value;
            if (auto m = expect_equal(params + " closed-vs-brute",
                                      gl_gauss_bruteforce(r, n, chi, lambda, budget), closed))
              return m;
            return expect_equal(params + " closed-vs-factored", closed,
                                gl_gauss_factored(r, n, chi, lambda));
          }});
        }
      }
    }
  }
  return cells;
}

std::vector<Cell> sl_cells(const VerifyOptions& o) {
  std::vector<Cell> cells;
  for (std::int64_t r = 1; r <= o.max_r; ++r) {
    for (std::int64_t n = 1; n <= o.max_n; ++n) {
      for (std::int64_t a = 0; a < n; ++a) {
        std::string params = "sl r=" + std::to_string(r) + " n=" + std::to_string(n) +
                             " a=" + std::to_string(a);
        const std::int64_t budget = o.budget;
        cells.push_back({params, [=]() {
          const AddChar lambda{n, a};
          return expect_equal(params, sl_gauss_bruteforce(r, n, lambda, budget),
                              sl_gauss_closed(r, n, lambda, budget));
        }});
      }
    }
  }
  return cells;
}

std::vector<Cell> counts_cells(const VerifyOptions& o) {
  std::vector<Cell> cells;
  for (std::int64_t r = 1; r <= o.max_r; ++r) {
    for (std::int64_t n = 1; n <= o.max_n; ++n) {
      for (std::int64_t b = 0; b < n; ++b) {
        std::string params = "counts r=" + std::to_string(r) + " n=" + std::to_string(n) +
                             " beta=" + std::to_string(b);
        const std::int64_t budget = o.budget;
        cells.push_back({params, [=]() -> std::optional<Mismatch> {
          const BigInt oracle = trace_count_bruteforce(r, n, b, budget);
          const BigInt via_divisors = trace_count_divisor_sum(r, n, b);
          if (via_divisors != oracle)
            return Mismatch{params + " divisor-sum", oracle.str(), via_divisors.str()};
          const BigInt via_product = trace_count_product(r, n, b);
          if (via_product != oracle)
            return Mismatch{params + " prime-product", oracle.str(), via_product.str()};
          return std::nullopt;
        }});
      }
      std::string params = "counts r=" + std::to_string(r) + " n=" + std::to_string(n) +
                           " sum-over-beta";
      cells.push_back({params, [=]() -> std::optional<Mismatch> {
        BigInt total = 0;
        for (std::int64_t b = 0; b < n; ++b) total += trace_count_divisor_sum(r, n, b);
        if (total != gl_order(r, n))
          return Mismatch{params, gl_order(r, n).str(), total.str()};
        return std::nullopt;
      }});
    }
  }
  return cells;
}

std::vector<Cell> cells_for(const std::string& suite, const VerifyOptions& o) {
  if (suite == "gauss") return gauss_cells(o);
  if (suite == "ramanujan") return ramanujan_cells(o);
  if (suite == "kloosterman") return kloosterman_cells(o);
  if (suite == "gl") return gl_cells(o);
  if (suite == "sl") return sl_cells(o);
  if (suite == "counts") return counts_cells(o);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

// Runs every cell, in parallel when jobs > 1, preserving grid order in the
// collected mismatches. Exceptions from cells (e.g. budget exhaustion) are
// rethrown on the calling thread.
void run_cells(const std::vector<Cell>& cells, std::int64_t jobs,
               std::vector<Mismatch>& mismatches) {
  std::vector<std::optional<Mismatch>> results(cells.size());
  const std::int64_t workers =
      std::max<std::int64_t>(1, std::min<std::int64_t>(jobs, static_cast<std::int64_t>(cells.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = cells[i].check();
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (std::int64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          try {
            results[i] = cells[i].check();
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  for (auto& r : results)
    if (r) mismatches.push_back(std::move(*r));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"gauss", "ramanujan", "kloosterman",
                                                 "gl", "sl", "counts"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  report.grid = options;
  if (suite == "all") {
    for (const std::string& name : suite_names()) {
      const auto cells = cells_for(name, options);
      report.cases_run += static_cast<std::int64_t>(cells.size());
      run_cells(cells, options.jobs, report.mismatches);
    }
  } else {
    const auto cells = cells_for(suite, options);
    report.cases_run = static_cast<std::int64_t>(cells.size());
    run_cells(cells, options.jobs, report.mismatches);
  }
  if (options.inject_mismatch) {
    ++report.cases_run;
    report.mismatches.push_back({"injected self-test cell", "0", "1"});
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace cyclosum
