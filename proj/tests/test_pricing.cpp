#include <random>

#include "bocsp/error.hpp"
#include "bocsp/master.hpp"
#include "bocsp/pricing.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bocsp;

TEST_CASE("knapsack examples") {
  const PricedPattern a = knapsack_1d(10, {3, 5}, {2.0, 3.5});
  CHECK(a.pattern.counts == std::vector<int>{0, 2});
  CHECK(a.value == doctest::Approx(7.0));
  // Frozen from enumeration of the 7 feasible count arrays.
  CHECK(oracle::knapsack_by_enumeration(10, {3, 5}, {2.0, 3.5}).value == doctest::Approx(7.0));

  const PricedPattern zero = knapsack_1d(10, {3, 5}, {0.0, 0.0});
  CHECK(zero.pattern.counts == std::vector<int>{0, 0});
  CHECK(zero.value == 0.0);

  const PricedPattern mixed = knapsack_1d(10, {3, 5}, {1.0, -1.0});
  CHECK(mixed.pattern.counts == std::vector<int>{3, 0});
  CHECK(mixed.value == doctest::Approx(3.0));
}

TEST_CASE("knapsack rejects items longer than the object") {
  CHECK_THROWS_AS(knapsack_1d(10, {11}, {1.0}), Error);
  CHECK_THROWS_AS(knapsack_1d(10, {0}, {1.0}), Error);
}

TEST_CASE("knapsack equals enumeration over every L <= 25 and m <= 4") {
  std::mt19937_64 rng(5);
  int cases = 0;
  for (int L = 1; L <= 25; ++L) {
    for (int m = 1; m <= 4; ++m) {
      std::uniform_int_distribution<int> len(1, L);
      std::uniform_int_distribution<int> ival(-2, 6);
      std::uniform_real_distribution<double> rval(-1.0, 4.0);
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<int> lengths;
        std::vector<double> values;
        for (int i = 0; i < m; ++i) {
          lengths.push_back(len(rng));
          // Half the trials use integer values, which produce many ties.
          values.push_back(trial % 2 == 0 ? ival(rng) : rval(rng));
        }
        const PricedPattern got = knapsack_1d(L, lengths, values);
        const oracle::KnapsackBest want = oracle::knapsack_by_enumeration(L, lengths, values);
        CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
        CHECK(got.pattern.counts == want.counts);
        int used = 0;
        for (int i = 0; i < m; ++i) used += lengths[i] * got.pattern.counts[i];
        CHECK(used <= L);
        ++cases;
      }
    }
  }
  CHECK(cases == 25 * 4 * 12);
}

TEST_CASE("capped demand") {
  CHECK(capped_demand(Instance::two_dimensional("a", 200, 100, {{25, 25, 200}}, 1, false)) ==
        std::vector<int>{32});
  CHECK(capped_demand(Instance::two_dimensional("b", 10, 10, {{4, 5, 2}}, 1, false)) ==
        std::vector<int>{2});
  CHECK(capped_demand(Instance::two_dimensional("c", 10, 6, {{4, 3, 9}}, 1, false)) ==
        std::vector<int>{5});
}

TEST_CASE("price_2d examples") {
  const Instance one = Instance::two_dimensional("one", 10, 6, {{4, 3, 2}}, 1, false);
  const PricedPattern a = price_2d(one, {1.0}, false, {120, SolveLimits::unlimited()});
  CHECK(a.pattern.counts == std::vector<int>{2});
  CHECK(a.value == doctest::Approx(2.0));
  CHECK(is_feasible_pattern(one, a.pattern));
  // Frozen from the two-stage brute force.
  CHECK(oracle::two_stage_by_enumeration(10, 6, {{4, 3, 1.0}, {4, 3, 1.0}}, false) ==
        doctest::Approx(2.0));

  const PricedPattern none = price_2d(one, {0.0}, false);
  CHECK(none.value == 0.0);
  CHECK(none.pattern.total_items() == 0);

  const Instance turn = Instance::two_dimensional("turn", 10, 6, {{7, 2, 1}}, 1, true);
  const PricedPattern b = price_2d(turn, {1.0}, true, {120, SolveLimits::unlimited()});
  CHECK(b.value == doctest::Approx(1.0));
  REQUIRE(b.pattern.layout.size() == 1);
  REQUIRE(b.pattern.layout[0].items.size() == 1);
  CHECK_FALSE(b.pattern.layout[0].items[0].rotated);
  CHECK(oracle::two_stage_by_enumeration(10, 6, {{7, 2, 1.0}}, true) == doctest::Approx(1.0));
}

TEST_CASE("price_2d refuses more copies than the cap") {
  const Instance big = Instance::two_dimensional("big", 200, 100, {{25, 25, 200}}, 1, true);
  try {
    price_2d(big, {1.0}, true, {10, SolveLimits::unlimited()});
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInstanceTooLarge);
  }
}

TEST_CASE("price_2d equals two-stage brute force on random micro-instances") {
  std::mt19937_64 rng(77);
  int checked = 0;
  int attempts = 0;
  while (checked < 40 && attempts < 2000) {
    ++attempts;
    const int L = std::uniform_int_distribution<int>(5, 15)(rng);
    const int W = std::uniform_int_distribution<int>(4, 12)(rng);
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const bool rotation = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    std::vector<ItemType> items;
    for (int i = 0; i < m; ++i) {
      items.push_back({std::uniform_int_distribution<int>(1, L)(rng),
                       std::uniform_int_distribution<int>(1, W)(rng),
                       std::uniform_int_distribution<int>(1, 3)(rng)});
    }
    const Instance inst = Instance::two_dimensional("micro", L, W, items, 1, rotation);
    std::vector<double> values;
    for (int i = 0; i < inst.item_count(); ++i) {
      values.push_back(std::uniform_int_distribution<int>(-1, 4)(rng) * 0.75);
    }
    const std::vector<int> cap = capped_demand(inst);
    std::vector<oracle::Piece> pieces;
    int copies = 0;
    for (int i = 0; i < inst.item_count(); ++i) {
      if (values[i] <= 0) continue;
      const ItemType& it = inst.item(i);
      const bool square = it.length == it.width;
      for (int c = 0; c < cap[i]; ++c) {
        pieces.push_back({it.length, it.width, values[i]});
        copies += (rotation && !square) ? 2 : 1;
      }
    }
    if (copies > 8 || pieces.empty()) continue;
    const PricedPattern got = price_2d(inst, values, rotation, {120, SolveLimits::unlimited()});
    const double want = oracle::two_stage_by_enumeration(L, W, pieces, rotation);
    CHECK(got.value == doctest::Approx(want).epsilon(1e-9));
    CHECK(got.value == doctest::Approx(got.pattern.value(values)).epsilon(1e-9));
    if (got.pattern.total_items() > 0) CHECK(is_feasible_pattern(inst, got.pattern));
    for (int i = 0; i < inst.item_count(); ++i) CHECK(got.pattern.counts[i] <= cap[i]);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("homogeneous patterns") {
  const Instance one = Instance::one_dimensional("h1", 10000, {{300, 0, 5}}, 1);
  const PatternSet h1 = homogeneous_patterns(one);
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].counts[0] == 33);

  const Instance two = Instance::two_dimensional("h2", 200, 100, {{25, 25, 5}}, 1, false);
  const PatternSet h2 = homogeneous_patterns(two);
  REQUIRE(h2.size() == 1);
  CHECK(h2[0].counts[0] == 32);
  CHECK(is_feasible_pattern(two, h2[0]));

  const Instance rot = Instance::two_dimensional("h3", 10, 6, {{6, 5, 5}}, 1, true);
  const PatternSet h3 = homogeneous_patterns(rot);
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].counts[0] == 2);  // upright 1*1, turned 2*1
  CHECK(is_feasible_pattern(rot, h3[0]));
}

TEST_CASE("homogeneous patterns are feasible and maximal for their item") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int L = std::uniform_int_distribution<int>(10, 60)(rng);
    const int W = std::uniform_int_distribution<int>(10, 60)(rng);
    const bool rotation = trial % 2 == 0;
    std::vector<ItemType> items;
    for (int i = 0; i < 3; ++i) {
      items.push_back({std::uniform_int_distribution<int>(1, std::min(L, W))(rng),
                       std::uniform_int_distribution<int>(1, std::min(L, W))(rng), 1});
    }
    const Instance inst = Instance::two_dimensional("hp", L, W, items, 1, rotation);
    for (const Pattern& p : homogeneous_patterns(inst)) {
      CHECK(is_feasible_pattern(inst, p));
      int type = 0;
      while (p.counts[type] == 0) ++type;
      const ItemType& it = inst.item(type);
      // One more copy than the best grid is already impossible by area or fit.
      const auto grid = [&](int len, int wid) { return (L / len) * (W / wid); };
      int most = grid(it.length, it.width);
      if (rotation) most = std::max(most, grid(it.width, it.length));
      CHECK(p.counts[type] == most);
    }
  }
  const Instance one = Instance::one_dimensional("h1d", 97, {{10, 0, 1}, {33, 0, 1}}, 1);
  for (const Pattern& p : homogeneous_patterns(one)) {
    for (int i = 0; i < 2; ++i) {
      if (p.counts[i] == 0) continue;
      CHECK(p.counts[i] * one.item(i).length <= 97);
      CHECK((p.counts[i] + 1) * one.item(i).length > 97);
    }
  }
}

namespace {

Pattern counts_only(std::vector<int> counts) {
  Pattern p;
  p.counts = std::move(counts);
  return p;
}

}  // namespace

TEST_CASE("reduced cost thresholds") {
  const Instance inst = Instance::one_dimensional("tiny", 10, {{3, 0, 4}, {5, 0, 2}}, 2);
  PatternSet set;
  set.insert(counts_only({3, 0}));
  set.insert(counts_only({0, 2}));

  MasterModel plain = build_master(inst, set, true);
  plain.set_objective(1.0, 0.0);
  const LpResult lp_plain = solve_lp(plain.model());
  CHECK(reduced_cost_threshold(plain, lp_plain, PricingSide::kObjects) == doctest::Approx(1.0));

  MasterModel sub1 = build_master(inst, set, true);
  sub1.set_objective(1.0, 0.0);
  sub1.add_aggregate_row(RowSense::kLessEqual, 2.0, 0.0, 1.0);
  const LpResult lp_sub1 = solve_lp(sub1.model());
  REQUIRE(lp_sub1.status == LpStatus::kOptimal);
  CHECK(reduced_cost_threshold(sub1, lp_sub1, PricingSide::kObjects) == doctest::Approx(1.0));
}

TEST_CASE("AWT x-side threshold matches the symbolic form and a finite difference") {
  const Instance inst = Instance::one_dimensional("awt", 10, {{3, 0, 7}, {5, 0, 3}}, 2);
  PatternSet set;
  set.insert(counts_only({3, 0}));
  set.insert(counts_only({0, 2}));
  const double beta1 = 0.5, beta2 = 0.25, rho = 1e-2, w = 0.4, f1i = 3, f2i = 2;
  MasterModel master = build_master(inst, set, true);
  master.set_objective(rho * beta1, rho * beta2, -rho * (beta1 * f1i + beta2 * f2i));
  const int u = master.add_extra_variable(0.0, kInfinity, 1.0);
  const int r35 = master.add_aggregate_row(RowSense::kLessEqual, beta1 * w * f1i, beta1 * w, 0.0);
  master.add_extra_coefficient(r35, u, -1.0);
  const int r36 = master.add_aggregate_row(RowSense::kLessEqual, beta2 * (1 - w) * f2i, 0.0,
                                           beta2 * (1 - w));
  master.add_extra_coefficient(r36, u, -1.0);
  const LpResult lp = solve_lp(master.model());
  REQUIRE(lp.status == LpStatus::kOptimal);
  const double threshold = reduced_cost_threshold(master, lp, PricingSide::kObjects);
  CHECK(threshold == doctest::Approx(rho * beta1 - lp.duals[r35] * beta1 * w));

  // Force a little of a new x column (pattern (1,1), no linking row) into the LP.
  const std::vector<double> pi = master.object_duals(lp);
  const double value = pi[0] + pi[1];
  const double reduced = threshold - value;
  LinearModel probe = master.model();
  const double delta = 1e-4;
  const int x = probe.add_variable(delta, kInfinity, rho * beta1, false);
  probe.add_coefficient(master.object_demand_row(0), x, 1);
  probe.add_coefficient(master.object_demand_row(1), x, 1);
  probe.add_coefficient(r35, x, beta1 * w);
  const LpResult moved = solve_lp(probe);
  REQUIRE(moved.status == LpStatus::kOptimal);
  const double slope = (moved.objective - lp.objective) / delta;
  CHECK(slope == doctest::Approx(reduced).epsilon(1e-4));
}
