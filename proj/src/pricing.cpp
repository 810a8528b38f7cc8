#include "bocsp/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bocsp/error.hpp"

namespace bocsp {

PricedPattern knapsack_1d(int object_length, const std::vector<int>& lengths,
                          const std::vector<double>& values) {
  const int m = static_cast<int>(lengths.size());
  if (static_cast<int>(values.size()) != m) {
    throw Error(ErrorKind::kInvalidInput, "knapsack: lengths and values differ in size");
  }
  for (int i = 0; i < m; ++i) {
    if (lengths[i] < 1 || lengths[i] > object_length) {
      throw Error(ErrorKind::kInvalidInput, "knapsack: item length out of range");
    }
    if (!std::isfinite(values[i])) throw Error(ErrorKind::kInvalidInput, "knapsack: value not finite");
  }
  const int L = object_length;
  // best[k][c]: best value using items k..m-1 within capacity c.
  std::vector<std::vector<double>> best(m + 1, std::vector<double>(L + 1, 0.0));
  for (int k = m - 1; k >= 0; --k) {
    const int l = lengths[k];
    for (int c = 0; c <= L; ++c) {
      double v = best[k + 1][c];
      if (c >= l) v = std::max(v, best[k][c - l] + values[k]);
      best[k][c] = v;
    }
  }
  PricedPattern result;
  result.pattern.counts.assign(m, 0);
  result.pattern.source = PatternSource::kPriced;
  int capacity = L;
  for (int k = 0; k < m; ++k) {
    const double target = best[k][capacity];
    const double tol = 1e-9 * std::max(1.0, std::abs(target));
    int t = 0;
    while (t * values[k] + best[k + 1][capacity - t * lengths[k]] < target - tol) ++t;
    result.pattern.counts[k] = t;
    capacity -= t * lengths[k];
  }
  result.value = result.pattern.value(values);
  return result;
}

std::vector<int> capped_demand(const Instance& instance) {
  if (!instance.is_2d()) throw Error(ErrorKind::kInvalidInput, "capped demand needs a 2D instance");
  const long area = static_cast<long>(instance.object_length()) * instance.object_width();
  std::vector<int> capped;
  for (const ItemType& item : instance.items()) {
    const long fit = area / (static_cast<long>(item.length) * item.width);
    capped.push_back(static_cast<int>(std::min<long>(item.demand, fit)));
  }
  return capped;
}

namespace {

struct Copy {
  int type;
  bool rotated;
  int length;  // along the object length
  int width;   // across the object width
  int physical;  // rotation twins share this id
};

}  // namespace

PricedPattern price_2d(const Instance& instance, const std::vector<double>& values,
                       bool allow_rotation, const Pricing2dOptions& options) {
  if (!instance.is_2d()) throw Error(ErrorKind::kInvalidInput, "price_2d needs a 2D instance");
  const int m = instance.item_count();
  if (static_cast<int>(values.size()) != m) {
    throw Error(ErrorKind::kInvalidInput, "price_2d: value count does not match item count");
  }
  const int L = instance.object_length();
  const int W = instance.object_width();
  const std::vector<int> cap = capped_demand(instance);

  std::vector<Copy> copies;
  int physical = 0;
  for (int i = 0; i < m; ++i) {
    if (!(values[i] > 0.0)) continue;
    const ItemType& item = instance.item(i);
    const bool upright = item.length <= L && item.width <= W;
    const bool turned = allow_rotation && item.length != item.width && item.width <= L &&
                        item.length <= W;
    for (int c = 0; c < cap[i]; ++c, ++physical) {
      if (upright) copies.push_back({i, false, item.length, item.width, physical});
      if (turned) copies.push_back({i, true, item.width, item.length, physical});
    }
  }
  if (static_cast<int>(copies.size()) > options.copy_cap) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "2D pricing needs " + std::to_string(copies.size()) + " item copies, cap is " +
                    std::to_string(options.copy_cap));
  }
  std::stable_sort(copies.begin(), copies.end(), [](const Copy& a, const Copy& b) {
    if (a.width != b.width) return a.width > b.width;
    if (a.type != b.type) return a.type < b.type;
    return !a.rotated && b.rotated;
  });

  PricedPattern result;
  result.pattern.counts.assign(m, 0);
  result.pattern.source = PatternSource::kPriced;
  const int s = static_cast<int>(copies.size());
  if (s == 0) return result;

  LinearModel model;
  // var[i][k] for k <= i.
  std::vector<std::vector<int>> var(s);
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k <= i; ++k) {
      var[i].push_back(model.add_variable(0.0, 1.0, -values[copies[i].type], true));
    }
  }
  // Each physical copy is used at most once, in either orientation.
  std::vector<int> usage_row(physical, -1);
  for (int i = 0; i < s; ++i) {
    int& row = usage_row[copies[i].physical];
    if (row < 0) row = model.add_row(RowSense::kLessEqual, 1.0);
    for (int k = 0; k <= i; ++k) model.add_coefficient(row, var[i][k], 1.0);
  }
  // Strip k holds at most L - l_k of further length, and only if opened.
  for (int k = 0; k < s; ++k) {
    const int row = model.add_row(RowSense::kLessEqual, 0.0);
    for (int i = k + 1; i < s; ++i) model.add_coefficient(row, var[i][k], copies[i].length);
    model.add_coefficient(row, var[k][k], -(L - copies[k].length));
  }
  const int width_row = model.add_row(RowSense::kLessEqual, W);
  for (int k = 0; k < s; ++k) model.add_coefficient(width_row, var[k][k], copies[k].width);

  const MilpResult milp = solve_milp(model, options.limits);
  if (!milp.has_solution()) return result;  // only reachable on a limit without incumbent

  for (int k = 0; k < s; ++k) {
    if (milp.values[var[k][k]] < 0.5) continue;
    Strip strip;
    strip.width = copies[k].width;
    for (int i = k; i < s; ++i) {
      if (milp.values[var[i][k]] < 0.5) continue;
      strip.items.push_back({copies[i].type, copies[i].rotated});
      ++result.pattern.counts[copies[i].type];
    }
    result.pattern.layout.push_back(std::move(strip));
  }
  result.value = result.pattern.value(values);
  return result;
}

PatternSet homogeneous_patterns(const Instance& instance) {
  PatternSet set;
  const int m = instance.item_count();
  const int L = instance.object_length();
  for (int i = 0; i < m; ++i) {
    const ItemType& item = instance.item(i);
    Pattern pattern;
    pattern.counts.assign(m, 0);
    pattern.source = PatternSource::kHomogeneous;
    if (!instance.is_2d()) {
      pattern.counts[i] = L / item.length;
    } else {
      const int W = instance.object_width();
      auto count = [&](int len, int wid) {
        return (len <= L && wid <= W) ? (L / len) * (W / wid) : 0;
      };
      const int upright = count(item.length, item.width);
      const int turned = instance.allow_rotation() ? count(item.width, item.length) : 0;
      const bool rotated = turned > upright;
      const int len = rotated ? item.width : item.length;
      const int wid = rotated ? item.length : item.width;
      if (std::max(upright, turned) > 0) {
        for (int strip = 0; strip < W / wid; ++strip) {
          Strip s;
          s.width = wid;
          s.items.assign(L / len, Placement{i, rotated});
          pattern.layout.push_back(std::move(s));
        }
        pattern.counts[i] = std::max(upright, turned);
      }
    }
    if (pattern.counts[i] > 0) set.insert(std::move(pattern));
  }
  return set;
}

double reduced_cost_threshold(const MasterModel& master, const LpResult& lp, PricingSide side) {
  if (side == PricingSide::kObjects) return master.object_cost() - master.aggregate_dual_x(lp);
  return master.cycle_cost() - master.aggregate_dual_y(lp);
}

Pricer exact_pricer(const Pricing2dOptions& options) {
  return [options](const Instance& instance, const std::vector<double>& values) {
    if (instance.is_2d()) return price_2d(instance, values, instance.allow_rotation(), options);
    std::vector<int> lengths;
    for (const ItemType& item : instance.items()) lengths.push_back(item.length);
    return knapsack_1d(instance.object_length(), lengths, values);
  };
}

}  // namespace bocsp
