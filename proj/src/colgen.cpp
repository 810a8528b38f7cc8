#include "bocsp/colgen.hpp"

#include <chrono>
#include <cmath>
#include <map>

#include "bocsp/error.hpp"

namespace bocsp {
namespace {

constexpr double kEnterTolerance = 1e-6;
constexpr double kSameDual = 1e-9;

bool same_duals(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kSameDual) return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void ColgenConfig::validate() const {
  pricing_limits.validate();
  master_limits.validate();
  if (stall_cap < 1) throw Error(ErrorKind::kInvalidInput, "stall cap must be at least 1");
  if (copy_cap < 1) throw Error(ErrorKind::kInvalidInput, "copy cap must be at least 1");
}

Pricer ColgenConfig::effective_pricer() const {
  if (pricer) return pricer;
  return exact_pricer(Pricing2dOptions{copy_cap, pricing_limits});
}

void ColgenTrace::absorb(const ColgenTrace& other) {
  iterations += other.iterations;
  columns_added += other.columns_added;
  final_objective = other.final_objective;
  stalled = stalled || other.stalled;
  columns.insert(columns.end(), other.columns.begin(), other.columns.end());
}

ColgenResult generate_columns(MasterModel& master, const ColgenConfig& config) {
  config.validate();
  if (master.pattern_count() == 0) {
    throw Error(ErrorKind::kInvalidInput, "column generation needs at least one pattern");
  }
  const Pricer pricer = config.effective_pricer();
  const Instance& instance = master.instance();
  const double p = instance.saw_capacity();
  master.set_integrality(false);

  ColgenResult result;
  ColgenTrace& trace = result.trace;
  std::optional<Basis> basis;
  std::vector<double> previous;
  int repeats = 0;
  for (;;) {
    result.lp = solve_lp(master.model(), {}, basis ? &*basis : nullptr);
    if (result.lp.status == LpStatus::kUnbounded) {
      throw Error(ErrorKind::kNumericFailure, "restricted master relaxation is unbounded");
    }
    if (result.lp.status != LpStatus::kOptimal) break;
    basis = result.lp.basis;
    ++trace.iterations;
    trace.final_objective = result.lp.objective;

    const std::vector<double> pi = master.object_duals(result.lp);
    const std::vector<double> sigma = master.cycle_duals(result.lp);
    std::vector<double> duals = pi;
    duals.insert(duals.end(), sigma.begin(), sigma.end());
    repeats = same_duals(duals, previous) ? repeats + 1 : 1;
    previous = std::move(duals);
    if (repeats >= config.stall_cap) {
      trace.stalled = true;
      break;
    }

    const double tx = reduced_cost_threshold(master, result.lp, PricingSide::kObjects);
    const double ty = reduced_cost_threshold(master, result.lp, PricingSide::kCycles);
    bool added = false;
    auto offer = [&](const std::vector<double>& values, PricedBy side, double threshold) {
      PricedPattern priced = pricer(instance, values);
      if (priced.pattern.total_items() == 0) return;
      if (!(priced.value > threshold + kEnterTolerance)) return;
      const std::vector<int> counts = priced.pattern.counts;
      if (!master.add_pattern(std::move(priced.pattern))) return;
      trace.columns.push_back({counts, side, values, priced.value, threshold});
      ++trace.columns_added;
      added = true;
    };
    if (master.has_object_rows()) offer(pi, PricedBy::kObjects, tx);
    if (master.has_cycle_rows()) offer(sigma, PricedBy::kCycles, ty);
    if (!added) {
      // With the new linking row's dual free in (-inf, 0], the pair improves
      // iff sigma.a > ty or (pi + sigma/p).a > tx + ty/p.
      std::vector<double> joint(pi.size());
      for (std::size_t i = 0; i < pi.size(); ++i) joint[i] = pi[i] + sigma[i] / p;
      offer(joint, PricedBy::kJoint, tx + ty / p);
    }
    if (!added) break;
  }
  return result;
}

PatternSet initial_columns(const Instance& instance, const ColgenConfig& config,
                           ColgenTrace* trace) {
  const PatternSet homogeneous = homogeneous_patterns(instance);
  MasterModel objects(instance, homogeneous, true, DemandRows::kObjectsOnly);
  objects.set_objective(1.0, 0.0);
  const ColgenResult first = generate_columns(objects, config);
  MasterModel cycles(instance, homogeneous, true, DemandRows::kCyclesOnly);
  cycles.set_objective(0.0, 1.0);
  const ColgenResult second = generate_columns(cycles, config);
  if (trace) {
    trace->absorb(first.trace);
    trace->absorb(second.trace);
  }
  PatternSet merged = objects.patterns();
  for (const Pattern& pattern : cycles.patterns()) merged.insert(pattern);
  return merged;
}

namespace {

std::optional<std::vector<double>> hint_values(const MasterModel& master, const FrontPoint& hint) {
  std::map<std::vector<int>, int> index;
  for (int j = 0; j < master.pattern_count(); ++j) index.emplace(master.patterns()[j].counts, j);
  std::vector<double> values(master.model().num_variables(), 0.0);
  for (const UsedPattern& used : hint.solution) {
    const auto it = index.find(used.counts);
    if (it == index.end()) return std::nullopt;
    values[master.x_var(it->second)] = static_cast<double>(used.x);
    values[master.y_var(it->second)] = static_cast<double>(used.y);
  }
  return values;
}

}  // namespace

SubproblemOutcome solve_subproblem(const Instance& instance, PatternSet& pool,
                                   const SubproblemSetup& setup, const ColgenConfig& config,
                                   std::string label, const FrontPoint* hint) {
  const auto start = std::chrono::steady_clock::now();
  SubproblemOutcome out;
  out.record.label = std::move(label);
  MasterModel master(instance, pool, true, config.demand_rows);
  setup(master);

  LpResult lp;
  if (config.mode == ColgenMode::kDynamic) {
    ColgenResult cg = generate_columns(master, config);
    out.trace = std::move(cg.trace);
    out.record.columns_added = out.trace.columns_added;
    lp = std::move(cg.lp);
    pool = master.patterns();
  } else {
    lp = solve_lp(master.model());
  }
  out.patterns = master.patterns();
  out.record.patterns = master.pattern_count();
  if (lp.status != LpStatus::kOptimal) {
    out.record.lp_infeasible = true;
    out.record.status = MilpStatus::kInfeasible;
    out.record.seconds = seconds_since(start);
    return out;
  }
  out.record.lp_objective = lp.objective;

  master.set_integrality(true);
  std::optional<std::vector<double>> hinted;
  if (hint) hinted = hint_values(master, *hint);
  const MilpResult milp =
      solve_milp(master.model(), config.master_limits, {}, hinted ? &*hinted : nullptr);
  out.record.status = milp.status;
  out.record.nodes = milp.nodes;
  if (milp.has_solution()) {
    out.record.objective = milp.objective;
    out.record.gap = milp.gap;
    IntegerSolution solution = master.extract(milp.values);
    out.record.point = std::make_pair(solution.f1, solution.f2);
    out.solution = std::move(solution);
  }
  out.record.seconds = seconds_since(start);
  return out;
}

FrontPoint make_point(const Instance& instance, const PatternSet& patterns,
                      const IntegerSolution& solution, bool proven, std::string method) {
  FrontPoint point;
  point.f1 = solution.f1;
  point.f2 = solution.f2;
  point.proven = proven;
  point.method = std::move(method);
  point.instance = instance.id();
  for (int j = 0; j < patterns.size(); ++j) {
    if (solution.x[j] == 0 && solution.y[j] == 0) continue;
    point.solution.push_back({patterns[j].counts, solution.x[j], solution.y[j]});
  }
  return point;
}

LexicographicResult lexicographic_points(const Instance& instance, PatternSet& pool,
                                         const ColgenConfig& config, const std::string& method) {
  LexicographicResult result;
  auto run = [&](const char* label, double per_object, double per_cycle,
                 std::optional<double> max_objects, std::optional<double> max_cycles,
                 const std::optional<SubproblemOutcome>& previous) -> std::optional<SubproblemOutcome> {
    std::optional<FrontPoint> hint;
    if (previous) hint = make_point(instance, previous->patterns, *previous->solution, false, "");
    SubproblemOutcome out = solve_subproblem(
        instance, pool,
        [&](MasterModel& master) {
          master.set_objective(per_object, per_cycle);
          if (max_objects) master.add_aggregate_row(RowSense::kLessEqual, *max_objects, 1.0, 0.0);
          if (max_cycles) master.add_aggregate_row(RowSense::kLessEqual, *max_cycles, 0.0, 1.0);
        },
        config, label, hint ? &*hint : nullptr);
    result.records.push_back(out.record);
    result.trace.absorb(out.trace);
    if (out.infeasible()) {
      throw Error(ErrorKind::kInfeasible, std::string("lexicographic subproblem ") + label +
                                              " is infeasible");
    }
    if (!out.has_point()) return std::nullopt;
    return out;
  };

  const auto a = run("lex1-objects", 1.0, 0.0, std::nullopt, std::nullopt, std::nullopt);
  if (!a) return result;
  const auto b =
      run("lex1-cycles", 0.0, 1.0, static_cast<double>(a->solution->f1), std::nullopt, a);
  if (!b) return result;
  const auto c = run("lex2-cycles", 0.0, 1.0, std::nullopt, std::nullopt, std::nullopt);
  if (!c) return result;
  const auto d =
      run("lex2-objects", 1.0, 0.0, std::nullopt, static_cast<double>(c->solution->f2), c);
  if (!d) return result;

  result.lex1 = make_point(instance, b->patterns, *b->solution, a->proven() && b->proven(), method);
  result.lex2 = make_point(instance, d->patterns, *d->solution, c->proven() && d->proven(), method);
  result.ideal = {result.lex1.f1, result.lex2.f2};
  result.complete = true;
  return result;
}

}  // namespace bocsp
