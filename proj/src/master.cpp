#include "bocsp/master.hpp"

#include <cmath>

#include "bocsp/error.hpp"

namespace bocsp {

std::pair<long, long> evaluate_point(const IntegerSolution& solution) {
  long f1 = 0, f2 = 0;
  for (long v : solution.x) f1 += v;
  for (long v : solution.y) f2 += v;
  return {f1, f2};
}

FeasibilityReport check_feasible(const Instance& instance, const PatternSet& patterns,
                                 const IntegerSolution& solution) {
  FeasibilityReport report;
  auto fail = [&](RowGroup group, int index, std::string message) {
    report.feasible = false;
    report.group = group;
    report.index = index;
    report.message = std::move(message);
    return report;
  };
  const int n = patterns.size();
  if (static_cast<int>(solution.x.size()) != n || static_cast<int>(solution.y.size()) != n) {
    return fail(RowGroup::kExtra, -1, "solution length does not match pattern count");
  }
  for (int j = 0; j < n; ++j) {
    if (solution.x[j] < 0 || solution.y[j] < 0) {
      return fail(RowGroup::kExtra, j, "negative frequency for pattern " + std::to_string(j + 1));
    }
  }
  const int p = instance.saw_capacity();
  for (int i = 0; i < instance.item_count(); ++i) {
    long objects = 0, cycles = 0;
    for (int j = 0; j < n; ++j) {
      objects += static_cast<long>(patterns[j].counts[i]) * solution.x[j];
      cycles += static_cast<long>(patterns[j].counts[i]) * solution.y[j];
    }
    if (objects < instance.item(i).demand) {
      return fail(RowGroup::kObjectDemand, i,
                  "demand_x row " + std::to_string(i + 1) + " (" + std::to_string(objects) +
                      " < " + std::to_string(instance.item(i).demand) + ")");
    }
    if (cycles < instance.cycle_demand(i)) {
      return fail(RowGroup::kCycleDemand, i,
                  "demand_y row " + std::to_string(i + 1) + " (" + std::to_string(cycles) +
                      " < " + std::to_string(instance.cycle_demand(i)) + ")");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (solution.x[j] > static_cast<long>(p) * solution.y[j]) {
      return fail(RowGroup::kLinking, j,
                  "linking row " + std::to_string(j + 1) + " (" + std::to_string(solution.x[j]) +
                      " > " + std::to_string(p) + "*" + std::to_string(solution.y[j]) + ")");
    }
  }
  const auto [f1, f2] = evaluate_point(solution);
  if (f1 != solution.f1 || f2 != solution.f2) {
    return fail(RowGroup::kExtra, -1, "stored objective values do not match the frequencies");
  }
  return report;
}

MasterModel::MasterModel(const Instance& instance, const PatternSet& patterns, bool relax,
                         DemandRows rows)
    : instance_(instance), relaxed_(relax) {
  const int m = instance.item_count();
  if (rows != DemandRows::kCyclesOnly) {
    for (int i = 0; i < m; ++i) {
      object_rows_.push_back(model_.add_row(RowSense::kGreaterEqual, instance.item(i).demand));
    }
  }
  if (rows != DemandRows::kObjectsOnly) {
    for (int i = 0; i < m; ++i) {
      cycle_rows_.push_back(model_.add_row(RowSense::kGreaterEqual, instance.cycle_demand(i)));
    }
  }
  for (const Pattern& pattern : patterns) add_pattern(pattern);
}

bool MasterModel::add_pattern(Pattern pattern) {
  if (static_cast<int>(pattern.counts.size()) != instance_.item_count()) {
    throw Error(ErrorKind::kInvalidInput, "pattern length does not match item count");
  }
  if (patterns_.contains(pattern.counts)) return false;
  const int x = model_.add_variable(0.0, kInfinity, cost_x_, !relaxed_);
  const int y = model_.add_variable(0.0, kInfinity, cost_y_, !relaxed_);
  for (int i = 0; i < instance_.item_count(); ++i) {
    const int a = pattern.counts[i];
    if (a == 0) continue;
    if (!object_rows_.empty()) model_.add_coefficient(object_rows_[i], x, a);
    if (!cycle_rows_.empty()) model_.add_coefficient(cycle_rows_[i], y, a);
  }
  const int link = model_.add_row(RowSense::kLessEqual, 0.0);
  model_.add_coefficient(link, x, 1.0);
  model_.add_coefficient(link, y, -instance_.saw_capacity());
  for (const Aggregate& agg : aggregates_) {
    if (agg.coef_x != 0.0) model_.add_coefficient(agg.row, x, agg.coef_x);
    if (agg.coef_y != 0.0) model_.add_coefficient(agg.row, y, agg.coef_y);
  }
  x_vars_.push_back(x);
  y_vars_.push_back(y);
  linking_rows_.push_back(link);
  patterns_.insert(std::move(pattern));
  return true;
}

int MasterModel::add_aggregate_row(RowSense sense, double rhs, double coef_x, double coef_y) {
  const int row = model_.add_row(sense, rhs);
  for (int j = 0; j < pattern_count(); ++j) {
    if (coef_x != 0.0) model_.add_coefficient(row, x_vars_[j], coef_x);
    if (coef_y != 0.0) model_.add_coefficient(row, y_vars_[j], coef_y);
  }
  aggregates_.push_back({row, coef_x, coef_y});
  return row;
}

int MasterModel::add_extra_variable(double lower, double upper, double cost) {
  return model_.add_variable(lower, upper, cost, false);
}

void MasterModel::add_extra_coefficient(int row, int var, double value) {
  model_.add_coefficient(row, var, value);
}

void MasterModel::set_objective(double per_object, double per_cycle, double offset) {
  cost_x_ = per_object;
  cost_y_ = per_cycle;
  for (int j = 0; j < pattern_count(); ++j) {
    model_.set_cost(x_vars_[j], per_object);
    model_.set_cost(y_vars_[j], per_cycle);
  }
  model_.set_objective_offset(offset);
}

void MasterModel::set_integrality(bool integer) {
  relaxed_ = !integer;
  for (int j = 0; j < pattern_count(); ++j) {
    model_.set_integer(x_vars_[j], integer);
    model_.set_integer(y_vars_[j], integer);
  }
}

std::vector<double> MasterModel::object_duals(const LpResult& lp) const {
  std::vector<double> duals(instance_.item_count(), 0.0);
  for (std::size_t i = 0; i < object_rows_.size(); ++i) duals[i] = lp.duals[object_rows_[i]];
  return duals;
}

std::vector<double> MasterModel::cycle_duals(const LpResult& lp) const {
  std::vector<double> duals(instance_.item_count(), 0.0);
  for (std::size_t i = 0; i < cycle_rows_.size(); ++i) duals[i] = lp.duals[cycle_rows_[i]];
  return duals;
}

double MasterModel::aggregate_dual_x(const LpResult& lp) const {
  double sum = 0.0;
  for (const Aggregate& agg : aggregates_) sum += lp.duals[agg.row] * agg.coef_x;
  return sum;
}

double MasterModel::aggregate_dual_y(const LpResult& lp) const {
  double sum = 0.0;
  for (const Aggregate& agg : aggregates_) sum += lp.duals[agg.row] * agg.coef_y;
  return sum;
}

IntegerSolution MasterModel::extract(const std::vector<double>& values) const {
  IntegerSolution solution;
  for (int j = 0; j < pattern_count(); ++j) {
    solution.x.push_back(std::lround(values[x_vars_[j]]));
    solution.y.push_back(std::lround(values[y_vars_[j]]));
  }
  const auto [f1, f2] = evaluate_point(solution);
  solution.f1 = f1;
  solution.f2 = f2;
  return solution;
}

MasterModel build_master(const Instance& instance, const PatternSet& patterns, bool relax,
                         DemandRows rows) {
  if (patterns.empty()) throw Error(ErrorKind::kInvalidInput, "pattern set is empty");
  for (const Pattern& pattern : patterns) {
    if (!is_feasible_pattern(instance, pattern)) {
      throw Error(ErrorKind::kInvalidInput, "pattern is infeasible for the instance");
    }
  }
  return MasterModel(instance, patterns, relax, rows);
}

}  // namespace bocsp
