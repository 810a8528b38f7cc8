#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bocsp/instance.hpp"
#include "bocsp/linear_model.hpp"
#include "bocsp/pattern.hpp"
#include "bocsp/simplex.hpp"

namespace bocsp {

enum class RowGroup { kObjectDemand, kCycleDemand, kLinking, kExtra };

// Which demand row families the master carries. The cycle rows are implied by
// the object rows, linking and integrality; kObjectsOnly drops them.
// kCyclesOnly is the second initialization run of column generation.
enum class DemandRows { kBoth, kObjectsOnly, kCyclesOnly };

struct IntegerSolution {
  std::vector<long> x;  // objects cut with pattern j
  std::vector<long> y;  // saw cycles run with pattern j
  long f1 = 0;
  long f2 = 0;
};

// (sum x, sum y).
std::pair<long, long> evaluate_point(const IntegerSolution& solution);

struct FeasibilityReport {
  bool feasible = true;
  RowGroup group = RowGroup::kExtra;
  int index = -1;  // item index for demand rows, pattern index for linking rows
  std::string message;
};

// Checks object demand, cycle demand, linking, non-negativity and the stored
// objective values. Everything is recomputed from the raw counts.
FeasibilityReport check_feasible(const Instance& instance, const PatternSet& patterns,
                                 const IntegerSolution& solution);

// Restricted master over a growing pattern set. Each pattern j owns variables
// x_j, y_j and the linking row x_j - p*y_j <= 0. Scalarizations attach
// "aggregate" rows whose coefficient on every x_j (resp. y_j) is the same
// constant; patterns added later pick those coefficients up automatically.
class MasterModel {
 public:
  MasterModel(const Instance& instance, const PatternSet& patterns, bool relax,
              DemandRows rows = DemandRows::kBoth);

  const Instance& instance() const { return instance_; }
  const PatternSet& patterns() const { return patterns_; }
  int pattern_count() const { return patterns_.size(); }
  const LinearModel& model() const { return model_; }
  bool relaxed() const { return relaxed_; }
  bool has_object_rows() const { return !object_rows_.empty(); }
  bool has_cycle_rows() const { return !cycle_rows_.empty(); }

  int x_var(int j) const { return x_vars_[j]; }
  int y_var(int j) const { return y_vars_[j]; }
  int object_demand_row(int i) const { return object_rows_.empty() ? -1 : object_rows_[i]; }
  int cycle_demand_row(int i) const { return cycle_rows_.empty() ? -1 : cycle_rows_[i]; }
  int linking_row(int j) const { return linking_rows_[j]; }

  // Returns false (and changes nothing) if the counts are already present.
  bool add_pattern(Pattern pattern);

  int add_aggregate_row(RowSense sense, double rhs, double coef_x, double coef_y);
  int add_extra_variable(double lower, double upper, double cost);
  void add_extra_coefficient(int row, int var, double value);
  void set_rhs(int row, double rhs) { model_.set_rhs(row, rhs); }

  // Objective = per_object*sum x + per_cycle*sum y + extras + offset.
  void set_objective(double per_object, double per_cycle, double offset = 0.0);
  double object_cost() const { return cost_x_; }
  double cycle_cost() const { return cost_y_; }

  void set_integrality(bool integer);

  // Duals of the demand rows (zeros for a dropped family).
  std::vector<double> object_duals(const LpResult& lp) const;
  std::vector<double> cycle_duals(const LpResult& lp) const;
  // Sum over aggregate rows of dual * coefficient on a new x (resp. y) column.
  double aggregate_dual_x(const LpResult& lp) const;
  double aggregate_dual_y(const LpResult& lp) const;

  // Rounds the pattern variables of a MILP solution.
  IntegerSolution extract(const std::vector<double>& values) const;

 private:
  struct Aggregate {
    int row;
    double coef_x;
    double coef_y;
  };

  Instance instance_;
  PatternSet patterns_;
  LinearModel model_;
  bool relaxed_;
  double cost_x_ = 0.0;
  double cost_y_ = 0.0;
  std::vector<int> x_vars_, y_vars_, object_rows_, cycle_rows_, linking_rows_;
  std::vector<Aggregate> aggregates_;
};

// Throws invalid-input for an empty pattern set. The objective is left at
// zero; callers choose it.
MasterModel build_master(const Instance& instance, const PatternSet& patterns, bool relax,
                         DemandRows rows = DemandRows::kBoth);

}  // namespace bocsp
