#include "bocsp/error.hpp"
#include "bocsp/instance.hpp"
#include "bocsp/master.hpp"
#include "bocsp/milp.hpp"
#include "bocsp/pattern.hpp"
#include "doctest.h"

using namespace bocsp;

namespace {

Instance tiny1d() { return Instance::one_dimensional("tiny", 10, {{3, 0, 4}, {5, 0, 2}}, 2); }

Pattern pattern(std::vector<int> counts) {
  Pattern p;
  p.counts = std::move(counts);
  return p;
}

PatternSet tiny_patterns() {
  PatternSet set;
  set.insert(pattern({3, 0}));
  set.insert(pattern({0, 2}));
  set.insert(pattern({1, 1}));
  return set;
}

}  // namespace

TEST_CASE("saw capacity is the floor of height over thickness") {
  CHECK(saw_capacity(70, 15) == 4);
  CHECK(saw_capacity(10, 10) == 1);
  CHECK(saw_capacity(58, 15) == 3);
  CHECK_THROWS_AS(saw_capacity(10, 0), Error);
  CHECK_THROWS_AS(saw_capacity(5, 10), Error);
}

TEST_CASE("instances merge duplicate items and reject items that do not fit") {
  const Instance inst =
      Instance::one_dimensional("dup", 10, {{3, 0, 4}, {5, 0, 2}, {3, 0, 1}}, 2);
  REQUIRE(inst.item_count() == 2);
  CHECK(inst.item(0).demand == 5);
  CHECK(inst.cycle_demand(0) == 3);
  CHECK_THROWS_AS(Instance::one_dimensional("big", 10, {{11, 0, 1}}, 1), Error);
  CHECK_THROWS_AS(Instance::one_dimensional("zero", 10, {{3, 0, 0}}, 1), Error);
  CHECK_THROWS_AS(Instance::one_dimensional("empty", 10, {}, 1), Error);
  // 2D: fits only when turned.
  CHECK_NOTHROW(Instance::two_dimensional("rot", 10, 6, {{5, 8, 1}}, 1, true));
  CHECK_THROWS_AS(Instance::two_dimensional("norot", 10, 6, {{5, 8, 1}}, 1, false), Error);
}

TEST_CASE("Two-item master has the expected shape and right-hand sides") {
  const MasterModel master = build_master(tiny1d(), tiny_patterns(), false);
  const LinearModel& model = master.model();
  CHECK(model.num_variables() == 6);
  CHECK(model.num_rows() == 4 + 3);
  CHECK(model.row(master.object_demand_row(0)).rhs == 4);
  CHECK(model.row(master.object_demand_row(1)).rhs == 2);
  CHECK(model.row(master.cycle_demand_row(0)).rhs == 2);
  CHECK(model.row(master.cycle_demand_row(1)).rhs == 1);
  for (int j = 0; j < 3; ++j) {
    const int row = master.linking_row(j);
    CHECK(model.row(row).sense == RowSense::kLessEqual);
    CHECK(model.row(row).rhs == 0);
    CHECK(model.coefficient(row, master.x_var(j)) == 1);
    CHECK(model.coefficient(row, master.y_var(j)) == -2);
    CHECK(model.variable(master.x_var(j)).integer);
  }
  CHECK(model.coefficient(master.object_demand_row(0), master.x_var(2)) == 1);
  CHECK(model.coefficient(master.cycle_demand_row(1), master.y_var(1)) == 2);
}

TEST_CASE("relaxed single-pattern master and the ceiling right-hand side") {
  const Instance inst = Instance::one_dimensional("one", 10, {{4, 0, 10}}, 3);
  PatternSet set;
  set.insert(pattern({2}));
  MasterModel master = build_master(inst, set, true);
  CHECK(master.model().num_variables() == 2);
  CHECK_FALSE(master.model().variable(0).integer);
  CHECK(master.model().row(master.object_demand_row(0)).rhs == 10);
  CHECK(master.model().row(master.cycle_demand_row(0)).rhs == 4);
  const int u = master.add_extra_variable(0, kInfinity, 1);
  CHECK(master.model().num_variables() == 3);
  CHECK_FALSE(master.model().variable(u).integer);
}

TEST_CASE("build_master rejects empty or infeasible pattern sets") {
  CHECK_THROWS_AS(build_master(tiny1d(), PatternSet{}, false), Error);
  PatternSet bad;
  bad.insert(pattern({4, 0}));  // 12 > 10
  CHECK_THROWS_AS(build_master(tiny1d(), bad, false), Error);
}

TEST_CASE("aggregate rows cover patterns added later") {
  MasterModel master = build_master(tiny1d(), tiny_patterns(), true);
  const int row = master.add_aggregate_row(RowSense::kLessEqual, 7, 0.0, 1.0);
  CHECK(master.add_pattern(pattern({0, 1})));
  CHECK_FALSE(master.add_pattern(pattern({3, 0})));
  CHECK(master.model().coefficient(row, master.y_var(3)) == 1.0);
  CHECK(master.model().coefficient(row, master.x_var(3)) == 0.0);
}

TEST_CASE("build_master is deterministic") {
  const MasterModel a = build_master(tiny1d(), tiny_patterns(), false);
  const MasterModel b = build_master(tiny1d(), tiny_patterns(), false);
  REQUIRE(a.model().num_variables() == b.model().num_variables());
  for (int j = 0; j < a.model().num_variables(); ++j) {
    const auto& ca = a.model().column(j);
    const auto& cb = b.model().column(j);
    REQUIRE(ca.size() == cb.size());
    for (std::size_t k = 0; k < ca.size(); ++k) {
      CHECK(ca[k].index == cb[k].index);
      CHECK(ca[k].value == cb[k].value);
    }
  }
}

TEST_CASE("evaluate_point sums frequencies") {
  CHECK(evaluate_point({{2, 1}, {1, 1}, 0, 0}) == std::make_pair(3L, 2L));
  CHECK(evaluate_point({{0, 0}, {0, 0}, 0, 0}) == std::make_pair(0L, 0L));
  CHECK(evaluate_point({{5}, {2}, 0, 0}) == std::make_pair(5L, 2L));
}

TEST_CASE("check_feasible reports the first violated row") {
  const Instance inst = tiny1d();
  const PatternSet set = tiny_patterns();
  const FeasibilityReport ok = check_feasible(inst, set, {{2, 1, 0}, {1, 1, 0}, 3, 2});
  CHECK(ok.feasible);

  const FeasibilityReport short_x = check_feasible(inst, set, {{1, 0, 0}, {1, 0, 0}, 1, 1});
  CHECK_FALSE(short_x.feasible);
  CHECK(short_x.group == RowGroup::kObjectDemand);
  CHECK(short_x.index == 0);

  const Instance one_item = Instance::one_dimensional("t", 10, {{3, 0, 4}}, 2);
  PatternSet single;
  single.insert(pattern({3}));
  const FeasibilityReport link = check_feasible(one_item, single, {{3}, {1}, 3, 1});
  CHECK_FALSE(link.feasible);
  CHECK(link.group == RowGroup::kLinking);
}

TEST_CASE("MILP solutions of the master always pass check_feasible") {
  const Instance inst = tiny1d();
  for (double cx : {1.0, 0.0, 0.3}) {
    MasterModel master = build_master(inst, tiny_patterns(), false);
    master.set_objective(cx, 1.0 - cx + 0.1);
    const MilpResult milp = solve_milp(master.model());
    REQUIRE(milp.status == MilpStatus::kOptimal);
    const IntegerSolution sol = master.extract(milp.values);
    CHECK(check_feasible(inst, master.patterns(), sol).feasible);
  }
}

TEST_CASE("pattern feasibility is rechecked from geometry") {
  const Instance inst = Instance::two_dimensional("g", 10, 6, {{4, 3, 2}, {7, 2, 1}}, 1, true);
  Pattern good;
  good.counts = {2, 0};
  good.layout = {Strip{3, {{0, false}, {0, false}}}};
  CHECK(is_feasible_pattern(inst, good));
  Pattern wrong_counts = good;
  wrong_counts.counts = {1, 0};
  CHECK_FALSE(is_feasible_pattern(inst, wrong_counts));
  Pattern too_long;
  too_long.counts = {3, 0};
  too_long.layout = {Strip{3, {{0, false}, {0, false}, {0, false}}}};
  CHECK_FALSE(is_feasible_pattern(inst, too_long));
  Pattern turned;
  turned.counts = {0, 1};
  turned.layout = {Strip{7, {{1, true}}}};  // rotated: 2 along, 7 across > W
  CHECK_FALSE(is_feasible_pattern(inst, turned));
}

TEST_CASE("maximal 1D patterns leave no room for the shortest item") {
  const PatternSet all = enumerate_maximal_patterns_1d(tiny1d());
  // (3,0), (0,2), (1,1): every other nonzero pattern is contained in one of these.
  CHECK(all.size() == 3);
  CHECK(all.contains({3, 0}));
  CHECK(all.contains({0, 2}));
  CHECK(all.contains({1, 1}));
}
