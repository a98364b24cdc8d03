#pragma once

#include <stdexcept>
#include <string>

namespace cyclosum {

// Argument is not a unit of Z_n where one is required.
struct NonUnitError : std::domain_error {
  explicit NonUnitError(const std::string& what) : std::domain_error(what) {}
};

// Conductor condition for inducing a character fails.
struct ConductorError : std::domain_error {
  explicit ConductorError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration would exceed the configured candidate budget.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A count-valued formula failed its integrality postcondition.
struct FormulaGuardError : std::logic_error {
  explicit FormulaGuardError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyclosum
