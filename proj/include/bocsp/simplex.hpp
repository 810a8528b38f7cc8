#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bocsp/linear_model.hpp"

namespace bocsp {

enum class BasisStatus : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Simplex basis split into structural and row (slack) statuses. A basis taken
// from a smaller model is a valid warm start for a model that only appended
// variables or rows: missing variables start at their lower bound and missing
// rows get a basic slack.
struct Basis {
  std::vector<BasisStatus> variables;
  std::vector<BasisStatus> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;  // includes the model's objective offset
  std::vector<double> duals;  // one per row, model row order
  std::vector<double> reduced_costs;
  Basis basis;
  int iterations = 0;
};

struct SimplexTolerances {
  double feasibility = 1e-7;
  double optimality = 1e-7;  // dual feasibility
  double pivot = 1e-9;
};

struct LpOptions {
  SimplexTolerances tolerances;
  int refactor_interval = 100;
  int max_iterations = 0;  // 0 = automatic, scales with model size
};

// Bounded-variable primal simplex with a two-phase cold start and a dual
// simplex warm start. `lower`/`upper` override the model bounds when given
// (branch-and-bound uses this); `warm` seeds the basis.
//
// Throws Error(kNumericFailure) when the basis cannot be recovered after
// refactoring and anti-cycling retries.
LpResult solve_lp(const LinearModel& model, const LpOptions& options = {},
                  const Basis* warm = nullptr,
                  const std::vector<double>* lower = nullptr,
                  const std::vector<double>* upper = nullptr);

}  // namespace bocsp
