#pragma once

#include <limits>
#include <vector>

namespace bocsp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct Variable {
  double lower = 0.0;
  double upper = kInfinity;
  double cost = 0.0;
  bool integer = false;
};

struct Row {
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0.0;
};

struct Entry {
  int index = 0;  // row index inside a column
  double value = 0.0;
};

// Minimization model stored column-wise. Rows and variables are only ever
// appended, so indices handed out stay valid for the lifetime of the model.
class LinearModel {
 public:
  int add_variable(double lower, double upper, double cost, bool integer);
  int add_row(RowSense sense, double rhs);
  // Adds `value` to coefficient (row, var).
  void add_coefficient(int row, int var, double value);

  void set_cost(int var, double cost) { variables_[var].cost = cost; }
  void set_bounds(int var, double lower, double upper);
  void set_integer(int var, bool integer) { variables_[var].integer = integer; }
  void set_rhs(int row, double rhs) { rows_[row].rhs = rhs; }
  void set_objective_offset(double offset) { objective_offset_ = offset; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Variable& variable(int j) const { return variables_[j]; }
  const Row& row(int i) const { return rows_[i]; }
  const std::vector<Entry>& column(int j) const { return columns_[j]; }
  double objective_offset() const { return objective_offset_; }

  double coefficient(int row, int var) const;
  double row_activity(int row, const std::vector<double>& values) const;
  double objective_value(const std::vector<double>& values) const;
  bool has_integers() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Row> rows_;
  std::vector<std::vector<Entry>> columns_;
  double objective_offset_ = 0.0;
};

}  // namespace bocsp
