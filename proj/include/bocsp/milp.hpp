#pragma once

#include <optional>
#include <vector>

#include "bocsp/linear_model.hpp"
#include "bocsp/simplex.hpp"

namespace bocsp {

struct SolveLimits {
  double time_limit_seconds = kInfinity;
  double relative_gap = 0.0;
  std::optional<long> node_limit;

  static SolveLimits unlimited() { return {}; }
  static SolveLimits pricing_default() { return {15.0, 0.01, std::nullopt}; }
  static SolveLimits master_default() { return {60.0, 1e-4, std::nullopt}; }

  void validate() const;
};

enum class MilpStatus {
  kOptimal,
  kFeasibleLimit,   // stopped at a limit with an incumbent
  kInfeasible,
  kLimitNoIncumbent,
};

const char* to_string(MilpStatus status);

struct MilpResult {
  MilpStatus status = MilpStatus::kInfeasible;
  std::vector<double> values;
  double objective = kInfinity;
  double best_bound = -kInfinity;
  double gap = kInfinity;
  long nodes = 0;
  double seconds = 0.0;

  bool has_solution() const {
    return status == MilpStatus::kOptimal || status == MilpStatus::kFeasibleLimit;
  }
};

// Best-bound branch and bound on the most fractional variable (ties to the
// lowest index). Child LPs are warm-started from the parent basis. A hint
// (one value per variable) is rounded on the integer variables, completed by
// an LP over the continuous ones and used as the first incumbent if feasible.
MilpResult solve_milp(const LinearModel& model, const SolveLimits& limits = {},
                      const LpOptions& lp_options = {},
                      const std::vector<double>* hint = nullptr);

}  // namespace bocsp
