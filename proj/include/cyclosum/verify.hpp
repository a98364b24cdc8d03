#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclosum/expsums.hpp"

namespace cyclosum {

struct VerifyOptions {
  std::int64_t max_n = 8;
  std::int64_t max_r = 2;
  std::int64_t budget = kDefaultBudget;
  std::int64_t jobs = 1;
  // Plants one known-bad cell so callers can exercise the mismatch exit path.
  bool inject_mismatch = false;
};

struct Mismatch {
  std::string params;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  VerifyOptions grid;
  std::int64_t cases_run = 0;
  std::vector<Mismatch> mismatches;
  std::int64_t elapsed_ms = 0;
};

// Suites runnable individually: each re-checks one family of closed forms
// against its independent route or enumeration oracle over the whole grid.
const std::vector<std::string>& suite_names();

// Runs "gauss", "ramanujan", "kloosterman", "gl", "sl", "counts", or "all"
// (all six in that order, one merged report). Cells run concurrently when
// jobs > 1; the report lists mismatches in grid order regardless.
// Unknown suite names throw std::invalid_argument; budget exhaustion inside a
// cell propagates as BudgetExceededError.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace cyclosum
