#pragma once

#include <functional>
#include <vector>

#include "bocsp/instance.hpp"
#include "bocsp/master.hpp"
#include "bocsp/milp.hpp"
#include "bocsp/pattern.hpp"
#include "bocsp/simplex.hpp"

namespace bocsp {

struct PricedPattern {
  Pattern pattern;
  double value = 0.0;  // sum of item value * count
};

// Unbounded integer knapsack over capacities 0..L by dynamic programming.
// Among optimal count arrays the lexicographically smallest is returned, so
// items with non-positive value are never packed.
PricedPattern knapsack_1d(int object_length, const std::vector<int>& lengths,
                          const std::vector<double>& values);

// min(d_i, floor(L*W / (l_i*w_i))) per item type.
std::vector<int> capped_demand(const Instance& instance);

struct Pricing2dOptions {
  int copy_cap = 120;
  SolveLimits limits = SolveLimits::pricing_default();
};

// Best two-stage guillotine pattern for the given item values, solved as a
// binary program over item copies sorted by non-ascending width (copy k may
// open a strip of its own width; copy i >= k may join that strip). With
// rotation every copy gets a rotated twin and at most one of the pair is
// used. Throws instance-too-large-for-exact-pricing past the copy cap.
PricedPattern price_2d(const Instance& instance, const std::vector<double>& values,
                       bool allow_rotation, const Pricing2dOptions& options = {});

// One pattern per item type holding as many copies of it as fit.
PatternSet homogeneous_patterns(const Instance& instance);

enum class PricingSide { kObjects, kCycles };

// Value a priced pattern must exceed (plus 1e-6) for its x (objects) or
// y (cycles) column to have negative reduced cost, given the duals of the
// aggregate rows attached to the master. The new linking row is taken at
// dual zero.
double reduced_cost_threshold(const MasterModel& master, const LpResult& lp, PricingSide side);

// Strategy used by column generation: maps item values to a pattern.
using Pricer = std::function<PricedPattern(const Instance&, const std::vector<double>&)>;

// Knapsack for 1D instances, price_2d (with the instance's rotation flag)
// for 2D instances.
Pricer exact_pricer(const Pricing2dOptions& options = {});

}  // namespace bocsp
