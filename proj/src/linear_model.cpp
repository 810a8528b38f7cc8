#include "bocsp/linear_model.hpp"

#include <cmath>

#include "bocsp/error.hpp"

namespace bocsp {

int LinearModel::add_variable(double lower, double upper, double cost, bool integer) {
  if (std::isnan(lower) || std::isnan(upper) || !std::isfinite(cost) || lower > upper) {
    throw Error(ErrorKind::kInvalidInput, "bad variable bounds or cost");
  }
  if (!std::isfinite(lower) && !std::isfinite(upper)) {
    throw Error(ErrorKind::kInvalidInput, "free variables are not supported");
  }
  variables_.push_back({lower, upper, cost, integer});
  columns_.emplace_back();
  return num_variables() - 1;
}

int LinearModel::add_row(RowSense sense, double rhs) {
  if (!std::isfinite(rhs)) throw Error(ErrorKind::kInvalidInput, "row rhs must be finite");
  rows_.push_back({sense, rhs});
  return num_rows() - 1;
}

void LinearModel::add_coefficient(int row, int var, double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::kInvalidInput, "non-finite coefficient");
  if (value == 0.0) return;
  for (Entry& entry : columns_[var]) {
    if (entry.index == row) {
      entry.value += value;
      return;
    }
  }
  columns_[var].push_back({row, value});
}

void LinearModel::set_bounds(int var, double lower, double upper) {
  if (lower > upper) throw Error(ErrorKind::kInvalidInput, "lower bound above upper bound");
  variables_[var].lower = lower;
  variables_[var].upper = upper;
}

double LinearModel::coefficient(int row, int var) const {
  for (const Entry& entry : columns_[var]) {
    if (entry.index == row) return entry.value;
  }
  return 0.0;
}

double LinearModel::row_activity(int row, const std::vector<double>& values) const {
  double total = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    for (const Entry& entry : columns_[j]) {
      if (entry.index == row) total += entry.value * values[j];
    }
  }
  return total;
}

double LinearModel::objective_value(const std::vector<double>& values) const {
  double total = objective_offset_;
  for (int j = 0; j < num_variables(); ++j) total += variables_[j].cost * values[j];
  return total;
}

bool LinearModel::has_integers() const {
  for (const Variable& v : variables_) {
    if (v.integer) return true;
  }
  return false;
}

}  // namespace bocsp
