#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vbs/state.hpp"
#include "vbs/vbs_states.hpp"

namespace vbs {

/// Grid restrictions for the closed-form-versus-oracle sweep. The default
/// grid covers n = 2 with chains up to N = 8 and n = 3 up to N = 4.
struct VerifyOptions {
  std::vector<int> n_values = {2, 3, 4, 5};  // grid points with other n are skipped
  std::optional<int> max_chain;              // caps every constructed chain length
  std::vector<std::string> only;             // empty: run every check
  std::size_t amplitude_budget = kDefaultAmplitudeBudget;
  std::size_t matrix_budget = kDefaultMatrixBudget;
};

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t points = 0;
  bool passed = false;
  std::string detail;
};

// Names accepted by VerifyOptions::only, in execution order.
std::vector<std::string> verification_check_names();

/// Throws DomainError for unknown check names and BudgetError if any state or
/// matrix the selected checks would build exceeds a budget. Runs no numerics.
void plan_verification(const VerifyOptions& options);

std::vector<CheckResult> run_verification(const VerifyOptions& options);

nlohmann::json verification_summary(const std::vector<CheckResult>& results);

}  // namespace vbs
