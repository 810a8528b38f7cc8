#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bocsp/front.hpp"
#include "bocsp/instance.hpp"
#include "bocsp/master.hpp"
#include "bocsp/milp.hpp"
#include "bocsp/pattern.hpp"
#include "bocsp/pricing.hpp"

namespace bocsp {

enum class ColgenMode { kStatic, kDynamic };

struct ColgenConfig {
  ColgenMode mode = ColgenMode::kDynamic;
  SolveLimits pricing_limits = SolveLimits::pricing_default();
  SolveLimits master_limits = SolveLimits::master_default();
  int stall_cap = 5;
  int copy_cap = 120;
  DemandRows demand_rows = DemandRows::kBoth;
  // Overrides the exact pricer (knapsack / two-stage MILP) when set.
  Pricer pricer;

  void validate() const;
  Pricer effective_pricer() const;
};

enum class PricedBy { kObjects, kCycles, kJoint };

struct ColumnRecord {
  std::vector<int> counts;
  PricedBy side = PricedBy::kObjects;
  std::vector<double> item_values;  // what the pricer was given
  double value = 0.0;
  double threshold = 0.0;
};

struct ColgenTrace {
  int iterations = 0;
  int columns_added = 0;
  double final_objective = 0.0;
  bool stalled = false;
  std::vector<ColumnRecord> columns;

  void absorb(const ColgenTrace& other);
};

struct ColgenResult {
  LpResult lp;  // relaxation of the final master
  ColgenTrace trace;
};

// Column generation on the relaxation of `master`, which must already carry
// its objective and scalarization rows. Each round prices the x side against
// the object-demand duals and the y side against the cycle-demand duals; when
// neither yields a new column, the pair (x_j, y_j) is priced jointly with
// values pi + sigma/p. Stops when nothing beats its threshold or the
// demand-dual vector has repeated for `stall_cap` rounds. An infeasible
// relaxation is returned as is.
ColgenResult generate_columns(MasterModel& master, const ColgenConfig& config);

// Homogeneous patterns refined by two column generation runs (objects with
// object rows only, cycles with cycle rows only), merged without duplicates.
PatternSet initial_columns(const Instance& instance, const ColgenConfig& config,
                           ColgenTrace* trace = nullptr);

// Builds the scalarized master on top of the demand/linking rows.
using SubproblemSetup = std::function<void(MasterModel&)>;

struct SubproblemRecord {
  std::string label;
  MilpStatus status = MilpStatus::kInfeasible;
  bool lp_infeasible = false;
  double lp_objective = 0.0;
  double objective = 0.0;
  double gap = 0.0;
  double seconds = 0.0;
  long nodes = 0;
  int columns_added = 0;
  int patterns = 0;
  std::optional<std::pair<long, long>> point;
};

struct SubproblemOutcome {
  SubproblemRecord record;
  std::optional<IntegerSolution> solution;
  PatternSet patterns;  // pattern set the solution refers to
  ColgenTrace trace;

  bool infeasible() const {
    return record.lp_infeasible || record.status == MilpStatus::kInfeasible;
  }
  bool has_point() const { return solution.has_value(); }
  bool proven() const { return record.status == MilpStatus::kOptimal; }
};

// One scalarized integer subproblem over `pool`. In dynamic mode column
// generation runs on its relaxation first and the new columns are appended
// to `pool`. `hint` is a solution known to satisfy the subproblem (matched to
// the pool by pattern counts); it seeds the branch and bound.
SubproblemOutcome solve_subproblem(const Instance& instance, PatternSet& pool,
                                   const SubproblemSetup& setup, const ColgenConfig& config,
                                   std::string label, const FrontPoint* hint = nullptr);

FrontPoint make_point(const Instance& instance, const PatternSet& patterns,
                      const IntegerSolution& solution, bool proven, std::string method);

struct LexicographicResult {
  bool complete = false;  // false if a solve stopped at a limit without incumbent
  FrontPoint lex1;        // min objects, then min cycles
  FrontPoint lex2;        // min cycles, then min objects
  std::pair<long, long> ideal{0, 0};
  std::vector<SubproblemRecord> records;
  ColgenTrace trace;
};

LexicographicResult lexicographic_points(const Instance& instance, PatternSet& pool,
                                         const ColgenConfig& config,
                                         const std::string& method = "");

}  // namespace bocsp
