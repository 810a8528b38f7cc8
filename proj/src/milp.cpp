#include "bocsp/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <queue>

#include "bocsp/error.hpp"

namespace bocsp {
namespace {

constexpr double kIntegrality = 1e-6;
constexpr int kMaxPlungeDepth = 400;

using Clock = std::chrono::steady_clock;

struct BoundChange {
  int var;
  double lower;
  double upper;
};

struct Node {
  double bound;
  int depth;
  long id;
  std::vector<BoundChange> changes;
  std::shared_ptr<const Basis> basis;
};

struct NodeOrder {
  // priority_queue pops the "largest"; we want the lowest bound, then the
  // deepest node, then the oldest.
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const LinearModel& model, const SolveLimits& limits,
                 const LpOptions& lp_options)
      : model_(model), limits_(limits), lp_options_(lp_options), start_(Clock::now()) {
    const int n = model.num_variables();
    root_lower_.resize(n);
    root_upper_.resize(n);
    for (int j = 0; j < n; ++j) {
      const Variable& v = model.variable(j);
      root_lower_[j] = v.integer ? std::ceil(v.lower - kIntegrality) : v.lower;
      root_upper_[j] = v.integer ? std::floor(v.upper + kIntegrality) : v.upper;
      if (v.integer) integers_.push_back(j);
    }
    objective_scale_ = find_objective_scale(model);
  }

  MilpResult run(const std::vector<double>* hint) {
    MilpResult result;
    std::vector<double> lower = root_lower_, upper = root_upper_;
    LpResult root = solve_lp(model_, lp_options_, nullptr, &lower, &upper);
    if (root.status == LpStatus::kInfeasible) {
      result.status = MilpStatus::kInfeasible;
      result.seconds = elapsed();
      return result;
    }
    if (root.status == LpStatus::kUnbounded) {
      throw Error(ErrorKind::kInvalidInput, "MILP relaxation is unbounded");
    }
    if (hint) try_hint(*hint, root);

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    open.push(Node{effective_bound(root.objective), 0, next_id++, {},
                   std::make_shared<const Basis>(root.basis)});
    bool root_done = false;
    bool stopped = false;
    double global_bound = effective_bound(root.objective);

    // Plunging: after a branch the child in the rounding direction is
    // processed next, depth first, until it is pruned or integral.
    std::optional<Node> plunge;
    while (plunge || !open.empty()) {
      global_bound = open.empty() ? kInfinity : open.top().bound;
      if (plunge) global_bound = std::min(global_bound, plunge->bound);
      if (has_incumbent_ && gap_closed(global_bound)) break;
      if (out_of_time() || (limits_.node_limit && nodes_ >= *limits_.node_limit)) {
        stopped = true;
        if (plunge) open.push(std::move(*plunge));
        break;
      }
      Node node;
      if (plunge) {
        node = std::move(*plunge);
        plunge.reset();
      } else {
        node = open.top();
        open.pop();
      }
      if (has_incumbent_ && prunable(node.bound)) continue;
      ++nodes_;

      lower = root_lower_;
      upper = root_upper_;
      for (const BoundChange& c : node.changes) {
        lower[c.var] = c.lower;
        upper[c.var] = c.upper;
      }
      LpResult lp = root_done ? solve_lp(model_, lp_options_, node.basis.get(), &lower, &upper)
                              : root;
      root_done = true;
      if (lp.status != LpStatus::kOptimal) continue;
      const double bound = effective_bound(lp.objective);
      if (has_incumbent_ && prunable(bound)) continue;

      const int branch_var = most_fractional(lp.values);
      if (branch_var < 0) {
        offer(lp.values);
        continue;
      }
      if (node.depth == 0) {
        for (DiveRule rule : {DiveRule::kLargestUp, DiveRule::kNearest, DiveRule::kSparsify}) {
          dive(lp, lower, upper, rule);
        }
      } else if (nodes_ % 50 == 0) {
        constexpr DiveRule kCycle[] = {DiveRule::kLargestUp, DiveRule::kNearest, DiveRule::kSparsify};
        dive(lp, lower, upper, kCycle[(nodes_ / 50) % 3]);
      }
      if (nodes_ % 5 == 1 || node.depth == 0) round_and_fix(lp, lower, upper);
      if (!nested_ && has_incumbent_ && (node.depth == 0 || nodes_ % 200 == 0)) rins(lp);
      if (has_incumbent_ && prunable(bound)) continue;

      auto basis = std::make_shared<const Basis>(lp.basis);
      const double v = lp.values[branch_var];
      Node down{bound, node.depth + 1, next_id++, node.changes, basis};
      down.changes.push_back({branch_var, lower[branch_var], std::floor(v)});
      Node up{bound, node.depth + 1, next_id++, node.changes, basis};
      up.changes.push_back({branch_var, std::ceil(v), upper[branch_var]});
      const bool go_up = v - std::floor(v) >= 0.5;
      if (node.depth < kMaxPlungeDepth) {
        plunge = go_up ? std::move(up) : std::move(down);
        open.push(go_up ? std::move(down) : std::move(up));
      } else {
        open.push(std::move(down));
        open.push(std::move(up));
      }
    }

    result.nodes = nodes_;
    result.seconds = elapsed();
    if (!has_incumbent_) {
      result.status = stopped ? MilpStatus::kLimitNoIncumbent : MilpStatus::kInfeasible;
      if (stopped) result.best_bound = global_bound;
      return result;
    }
    result.values = incumbent_;
    result.objective = incumbent_objective_;
    result.best_bound = open.empty() ? incumbent_objective_
                                     : std::min(global_bound, incumbent_objective_);
    result.gap = relative_gap(result.best_bound);
    result.status = (open.empty() || gap_closed(result.best_bound)) ? MilpStatus::kOptimal
                                                                   : MilpStatus::kFeasibleLimit;
    return result;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  bool out_of_time() const {
    return std::isfinite(limits_.time_limit_seconds) && elapsed() >= limits_.time_limit_seconds;
  }

  // Smallest K <= 10000 with K * objective integral at every integer point,
  // or 0 when there is none (continuous variables with a cost, irrational
  // weights). Bounds are then rounded up to the next multiple of 1/K.
  static long find_objective_scale(const LinearModel& model) {
    std::vector<double> coefficients{model.objective_offset()};
    for (int j = 0; j < model.num_variables(); ++j) {
      const Variable& v = model.variable(j);
      if (v.cost == 0.0) continue;
      if (!v.integer) return 0;
      coefficients.push_back(v.cost);
    }
    for (long k = 1; k <= 10000; ++k) {
      bool integral = true;
      for (double c : coefficients) {
        const double scaled = c * static_cast<double>(k);
        if (std::abs(scaled - std::round(scaled)) > 1e-9 * std::max(1.0, std::abs(scaled))) {
          integral = false;
          break;
        }
      }
      if (integral) return k;
    }
    return 0;
  }

  double effective_bound(double lp_objective) const {
    if (objective_scale_ == 0) return lp_objective;
    const double k = static_cast<double>(objective_scale_);
    return std::ceil(lp_objective * k - 1e-6) / k;
  }

  double relative_gap(double bound) const {
    return std::max(0.0, incumbent_objective_ - bound) /
           std::max(1.0, std::abs(incumbent_objective_));
  }

  bool gap_closed(double bound) const {
    const double slack = std::max(1e-9, limits_.relative_gap * std::max(1.0, std::abs(incumbent_objective_)));
    return incumbent_objective_ - bound <= slack;
  }

  bool prunable(double bound) const { return gap_closed(bound); }

  int most_fractional(const std::vector<double>& values) const {
    int best = -1;
    double best_score = kIntegrality;
    for (int j : integers_) {
      const double frac = values[j] - std::floor(values[j]);
      const double score = std::min(frac, 1.0 - frac);
      if (score > best_score + 1e-12) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  bool row_feasible(const std::vector<double>& values) const {
    const int m = model_.num_rows();
    std::vector<double> activity(m, 0.0);
    for (int j = 0; j < model_.num_variables(); ++j) {
      if (values[j] == 0.0) continue;
      for (const Entry& e : model_.column(j)) activity[e.index] += e.value * values[j];
    }
    for (int i = 0; i < m; ++i) {
      const Row& row = model_.row(i);
      const double tol = 1e-6 * (1.0 + std::abs(row.rhs));
      if (row.sense != RowSense::kGreaterEqual && activity[i] > row.rhs + tol) return false;
      if (row.sense != RowSense::kLessEqual && activity[i] < row.rhs - tol) return false;
    }
    return true;
  }

  void offer(std::vector<double> values) {
    for (int j : integers_) values[j] = std::round(values[j]);
    if (!row_feasible(values)) return;
    const double objective = model_.objective_value(values);
    if (!has_incumbent_ || objective < incumbent_objective_ - 1e-9) {
      has_incumbent_ = true;
      incumbent_ = std::move(values);
      incumbent_objective_ = objective;
    }
  }

  void try_hint(const std::vector<double>& hint, const LpResult& root) {
    if (hint.size() != static_cast<std::size_t>(model_.num_variables())) {
      throw Error(ErrorKind::kInvalidInput, "MILP hint has the wrong length");
    }
    std::vector<double> lo = root_lower_, hi = root_upper_;
    for (int j : integers_) {
      const double r = std::round(hint[j]);
      if (r < lo[j] || r > hi[j]) return;
      lo[j] = hi[j] = r;
    }
    const LpResult fixed = solve_lp(model_, lp_options_, &root.basis, &lo, &hi);
    if (fixed.status == LpStatus::kOptimal) offer(fixed.values);
  }

  // Restricts the search to a box inside the model bounds (used for sub-MILPs).
  void restrict(const std::vector<double>& lower, const std::vector<double>& upper) {
    root_lower_ = lower;
    root_upper_ = upper;
    nested_ = true;
  }

  // Relaxation-induced neighbourhood: fix the integers on which the node LP
  // and the incumbent agree and search the rest with a small node budget.
  void rins(const LpResult& lp) {
    std::vector<double> lo = root_lower_, hi = root_upper_;
    std::size_t fixed = 0;
    for (int j : integers_) {
      if (std::abs(lp.values[j] - incumbent_[j]) < kIntegrality) {
        lo[j] = hi[j] = incumbent_[j];
        ++fixed;
      }
    }
    if (fixed * 2 < integers_.size() || fixed == integers_.size()) return;
    SolveLimits sub = limits_;
    sub.node_limit = 500;
    if (std::isfinite(limits_.time_limit_seconds)) {
      const double left = limits_.time_limit_seconds - elapsed();
      if (left <= 0.0) return;
      sub.time_limit_seconds = 0.25 * left;
    }
    BranchAndBound search(model_, sub, lp_options_);
    search.restrict(lo, hi);
    const MilpResult found = search.run(&incumbent_);
    if (!found.values.empty()) offer(found.values);
  }

  // Fix every integer to a rounded value and re-solve for the continuous part.
  void round_and_fix(const LpResult& lp, const std::vector<double>& lower,
                     const std::vector<double>& upper) {
    for (int mode = 0; mode < 2; ++mode) {
      if (out_of_time()) return;
      std::vector<double> lo = lower, hi = upper;
      bool ok = true;
      for (int j : integers_) {
        const double v = lp.values[j];
        double r = mode == 0 ? std::ceil(v - kIntegrality) : std::round(v);
        r = std::clamp(r, lower[j], upper[j]);
        if (!std::isfinite(r)) {
          ok = false;
          break;
        }
        lo[j] = hi[j] = r;
      }
      if (!ok) continue;
      LpResult fixed = solve_lp(model_, lp_options_, &lp.basis, &lo, &hi);
      if (fixed.status == LpStatus::kOptimal) offer(fixed.values);
    }
  }

  enum class DiveRule { kLargestUp, kNearest, kSparsify };

  // Depth-first rounding. kLargestUp pushes the most fractional-above variable
  // up; kNearest rounds the variable closest to an integer toward it;
  // kSparsify sends the smallest value below 1 to zero, which suits rows that
  // cap how many variables may be nonzero (or how often they round up). The
  // other direction is tried when the LP turns infeasible, and one earlier
  // choice may be flipped when both directions fail.
  void dive(const LpResult& start, std::vector<double> lower, std::vector<double> upper,
            DiveRule rule) {
    LpResult current = start;
    const int max_depth = 2 * static_cast<int>(integers_.size()) + 1;
    bool backtracked = false;
    struct Step {
      int var;
      double lower, upper;  // bounds before the step
      double value;
      bool up;
      LpResult before;
    };
    std::optional<Step> last;
    for (int depth = 0; depth < max_depth; ++depth) {
      if (out_of_time()) return;
      if (has_incumbent_ && prunable(effective_bound(current.objective))) return;
      int pick = -1;
      double best = -1.0;
      bool up = true;
      for (int j : integers_) {
        const double frac = current.values[j] - std::floor(current.values[j]);
        if (frac <= kIntegrality || frac >= 1.0 - kIntegrality) continue;
        double score;
        bool direction;
        if (rule == DiveRule::kLargestUp) {
          score = frac;
          direction = true;
        } else if (rule == DiveRule::kSparsify && current.values[j] < 1.0) {
          score = 2.0 - current.values[j];  // ahead of every rounding candidate
          direction = false;
        } else {
          score = 1.0 - std::min(frac, 1.0 - frac);
          direction = frac >= 0.5;
        }
        if (score > best) {
          best = score;
          pick = j;
          up = direction;
        }
      }
      if (pick < 0) {
        offer(current.values);
        return;
      }
      const double v = current.values[pick];
      Step step{pick, lower[pick], upper[pick], v, up, current};
      auto apply = [&](bool go_up) {
        lower[pick] = step.lower;
        upper[pick] = step.upper;
        (go_up ? lower[pick] : upper[pick]) = go_up ? std::ceil(v) : std::floor(v);
        return solve_lp(model_, lp_options_, &current.basis, &lower, &upper);
      };
      LpResult next = apply(up);
      if (next.status != LpStatus::kOptimal) next = apply(!up);
      if (next.status != LpStatus::kOptimal) {
        lower[pick] = step.lower;
        upper[pick] = step.upper;
        if (backtracked || !last) return;
        backtracked = true;
        // Flip the previous choice.
        const Step& prev = *last;
        lower[prev.var] = prev.lower;
        upper[prev.var] = prev.upper;
        (prev.up ? upper[prev.var] : lower[prev.var]) =
            prev.up ? std::floor(prev.value) : std::ceil(prev.value);
        next = solve_lp(model_, lp_options_, &prev.before.basis, &lower, &upper);
        if (next.status != LpStatus::kOptimal) return;
        last.reset();
        current = std::move(next);
        continue;
      }
      last = std::move(step);
      current = std::move(next);
    }
  }

  const LinearModel& model_;
  SolveLimits limits_;
  LpOptions lp_options_;
  Clock::time_point start_;
  std::vector<double> root_lower_, root_upper_;
  std::vector<int> integers_;
  long objective_scale_ = 0;
  bool nested_ = false;
  bool has_incumbent_ = false;
  std::vector<double> incumbent_;
  double incumbent_objective_ = kInfinity;
  long nodes_ = 0;
};

}  // namespace

void SolveLimits::validate() const {
  if (!(time_limit_seconds > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "time limit must be positive");
  }
  if (!(relative_gap >= 0.0)) throw Error(ErrorKind::kInvalidInput, "gap must be non-negative");
  if (node_limit && *node_limit <= 0) {
    throw Error(ErrorKind::kInvalidInput, "node limit must be positive");
  }
}

const char* to_string(MilpStatus status) {
  switch (status) {
    case MilpStatus::kOptimal: return "optimal";
    case MilpStatus::kFeasibleLimit: return "feasible-limit";
    case MilpStatus::kInfeasible: return "infeasible";
    case MilpStatus::kLimitNoIncumbent: return "limit-no-incumbent";
  }
  return "unknown";
}

MilpResult solve_milp(const LinearModel& model, const SolveLimits& limits,
                      const LpOptions& lp_options, const std::vector<double>* hint) {
  limits.validate();
  BranchAndBound search(model, limits, lp_options);
  return search.run(hint);
}

}  // namespace bocsp
