#include "bocsp/scalarize.hpp"

#include <chrono>
#include <cmath>

#include "bocsp/error.hpp"

namespace bocsp {
namespace {

using Clock = std::chrono::steady_clock;

// Shared bookkeeping of one method run.
class Run {
 public:
  Run(const Instance& instance, const MethodConfig& config, const PatternSet* initial)
      : instance_(instance), config_(config), start_(Clock::now()) {
    config.validate();
    result_.method = config.method;
    if (initial) {
      if (initial->empty()) throw Error(ErrorKind::kInvalidInput, "initial pattern set is empty");
      pool_ = *initial;
    } else {
      pool_ = initial_columns(instance, config.colgen, &result_.colgen);
    }
    result_.initial_columns = pool_.size();
  }

  SubproblemOutcome solve(const SubproblemSetup& setup, std::string label,
                          const FrontPoint* hint = nullptr) {
    SubproblemOutcome out = solve_subproblem(instance_, pool_, setup, config_.colgen,
                                             std::move(label), hint);
    ++result_.subproblems;
    result_.trace.push_back(out.record);
    result_.colgen.absorb(out.trace);
    return out;
  }

  FrontPoint point(const SubproblemOutcome& out, bool proven) const {
    return make_point(instance_, out.patterns, *out.solution, proven, to_string(config_.method));
  }

  void record(FrontPoint point) { result_.sequence.push_back(std::move(point)); }

  // Returns false (and flags the run) when the method cannot continue.
  bool lexicographic(LexicographicResult& lex) {
    lex = lexicographic_points(instance_, pool_, config_.colgen, to_string(config_.method));
    result_.subproblems += static_cast<long>(lex.records.size());
    result_.trace.insert(result_.trace.end(), lex.records.begin(), lex.records.end());
    result_.colgen.absorb(lex.trace);
    if (!lex.complete) {
      abort("a lexicographic subproblem stopped at a limit without an incumbent");
      return false;
    }
    result_.lex1 = std::make_pair(lex.lex1.f1, lex.lex1.f2);
    result_.lex2 = std::make_pair(lex.lex2.f1, lex.lex2.f2);
    return true;
  }

  void abort(std::string reason) {
    result_.aborted = true;
    result_.abort_reason = std::move(reason);
  }

  FrontResult& result() { return result_; }

  FrontResult finish() {
    result_.front = nondominated_filter(result_.sequence);
    result_.total_columns = pool_.size();
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  const Instance& instance_;
  const MethodConfig& config_;
  Clock::time_point start_;
  PatternSet pool_;
  FrontResult result_;
};

std::pair<long, long> coords(const FrontPoint& p) { return {p.f1, p.f2}; }

// Under limits the two lexicographic solves can return points that share a
// coordinate, or even cross. They then bound no search box and one of them
// weakly dominates the other.
bool spans_box(const LexicographicResult& lex) {
  return lex.lex1.f1 < lex.lex2.f1 && lex.lex1.f2 > lex.lex2.f2;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::kLec: return "lec";
    case Method::kFpa: return "fpa";
    case Method::kAwt: return "awt";
  }
  return "unknown";
}

Method parse_method(const std::string& text) {
  if (text == "lec") return Method::kLec;
  if (text == "fpa") return Method::kFpa;
  if (text == "awt") return Method::kAwt;
  throw Error(ErrorKind::kInvalidInput, "unknown method '" + text + "'");
}

void MethodConfig::validate() const {
  colgen.validate();
  const bool perm_ok = (permutation[0] == 1 && permutation[1] == 2) ||
                       (permutation[0] == 2 && permutation[1] == 1);
  if (!perm_ok) throw Error(ErrorKind::kInvalidInput, "permutation must be (1,2) or (2,1)");
  if (!(gamma >= 1.0)) throw Error(ErrorKind::kInvalidInput, "gamma must be at least 1");
  if (!(zeta > 0.0 && zeta < gamma)) {
    throw Error(ErrorKind::kInvalidInput, "zeta must lie strictly between 0 and gamma");
  }
  if (!(epsilon > 0.0 && epsilon <= gamma)) {
    throw Error(ErrorKind::kInvalidInput, "epsilon must lie in (0, gamma]");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorKind::kInvalidInput, "rho must be positive");
}

std::pair<double, double> cws_weights(std::pair<long, long> lex1, std::pair<long, long> lex2,
                                      double gamma, double zeta, std::array<int, 2> permutation) {
  const int i1 = permutation[0];
  const long a = i1 == 1 ? lex1.first : lex1.second;
  const long b = i1 == 1 ? lex2.first : lex2.second;
  if (a == b) throw Error(ErrorKind::kInvalidInput, "lexicographic points coincide");
  const double w = (gamma - zeta) / std::abs(static_cast<double>(a - b));
  return i1 == 1 ? std::make_pair(w, 1.0) : std::make_pair(1.0, w);
}

AwtParameters awt_parameters(std::pair<long, long> lex1, std::pair<long, long> lex2) {
  const long d1 = std::abs(lex2.first - lex1.first);
  const long d2 = lex1.second - lex2.second;
  if (d1 == 0 || d2 == 0) throw Error(ErrorKind::kInvalidInput, "lexicographic points coincide");
  return {1.0 / d1, 1.0 / std::abs(d2), 1.0 / d2};
}

std::vector<double> awt_weights(double delta) {
  std::vector<double> weights;
  if (!(delta > 0.0)) return weights;
  for (long k = 1;; ++k) {
    const double w = 1.0 - k * delta;
    if (!(w > 1e-12)) break;
    weights.push_back(w);
  }
  return weights;
}

FrontResult solve_lec(const Instance& instance, const MethodConfig& config,
                      const PatternSet* initial) {
  Run run(instance, config, initial);
  std::optional<double> eps;  // unbounded at the first iteration
  for (int t = 1;; ++t) {
    const std::string tag = "t" + std::to_string(t);
    const SubproblemOutcome sub1 = run.solve(
        [&](MasterModel& master) {
          master.set_objective(1.0, 0.0);
          if (eps) master.add_aggregate_row(RowSense::kLessEqual, *eps, 0.0, 1.0);
        },
        "sub1-" + tag);
    if (sub1.infeasible()) break;
    if (!sub1.has_point()) {
      run.abort("Sub1 stopped at a limit without an incumbent");
      break;
    }
    const double f1_hat = static_cast<double>(sub1.solution->f1);
    const FrontPoint sub1_point = run.point(sub1, sub1.proven());
    // The epsilon row is implied once sum x <= f1_hat holds exactly; keeping it
    // means a limit-bounded Sub2 can never undo the progress of Sub1.
    const SubproblemOutcome sub2 = run.solve(
        [&](MasterModel& master) {
          master.set_objective(0.0, 1.0);
          master.add_aggregate_row(RowSense::kLessEqual, f1_hat, 1.0, 0.0);
          if (eps) master.add_aggregate_row(RowSense::kLessEqual, *eps, 0.0, 1.0);
        },
        "sub2-" + tag, &sub1_point);
    if (!sub2.has_point()) {
      run.abort("Sub2 stopped at a limit without an incumbent");
      break;
    }
    run.record(run.point(sub2, sub1.proven() && sub2.proven()));
    run.result().iterations = t;
    eps = static_cast<double>(sub2.solution->f2) - 1.0;
  }
  return run.finish();
}

FrontResult solve_fpa(const Instance& instance, const MethodConfig& config,
                      const PatternSet* initial) {
  Run run(instance, config, initial);
  LexicographicResult lex;
  if (!run.lexicographic(lex)) return run.finish();
  if (!spans_box(lex)) {
    run.record(lex.lex1);
    if (coords(lex.lex1) != coords(lex.lex2)) run.record(lex.lex2);
    return run.finish();
  }
  const auto [w1, w2] = cws_weights(coords(lex.lex1), coords(lex.lex2), config.gamma,
                                    config.zeta, config.permutation);
  const int i1 = config.permutation[0];
  const long ideal_i1 = i1 == 1 ? lex.ideal.first : lex.ideal.second;
  std::vector<double> cuts;  // right-hand sides of f_i1 <= z - eps, one per node
  // The lexicographic point that is best in f_i1 satisfies every cut the
  // loop can add, so it always seeds the search.
  const FrontPoint& seed = i1 == 1 ? lex.lex1 : lex.lex2;
  for (int k = 0;; ++k) {
    const SubproblemOutcome out = run.solve(
        [&](MasterModel& master) {
          master.set_objective(w1, w2);
          for (double rhs : cuts) {
            master.add_aggregate_row(RowSense::kLessEqual, rhs, i1 == 1 ? 1.0 : 0.0,
                                     i1 == 1 ? 0.0 : 1.0);
          }
        },
        "S" + std::to_string(k), &seed);
    if (out.infeasible()) break;
    if (!out.has_point()) {
      run.abort("FPA subproblem stopped at a limit without an incumbent");
      break;
    }
    run.record(run.point(out, out.proven()));
    run.result().iterations = k + 1;
    const long z = i1 == 1 ? out.solution->f1 : out.solution->f2;
    if (z <= ideal_i1) break;
    cuts.push_back(static_cast<double>(z) - config.epsilon);
  }
  return run.finish();
}

FrontResult solve_awt(const Instance& instance, const MethodConfig& config,
                      const PatternSet* initial) {
  Run run(instance, config, initial);
  LexicographicResult lex;
  if (!run.lexicographic(lex)) return run.finish();
  run.record(lex.lex1);
  if (!spans_box(lex)) {
    if (coords(lex.lex1) != coords(lex.lex2)) run.record(lex.lex2);
    return run.finish();
  }
  const AwtParameters params = awt_parameters(coords(lex.lex1), coords(lex.lex2));
  const double f1i = static_cast<double>(lex.ideal.first);
  const double f2i = static_cast<double>(lex.ideal.second);
  const double rho = config.rho;
  // Any solution is feasible for an ISP (u absorbs the rest); start from the
  // last point found.
  FrontPoint seed = lex.lex1;
  int step = 0;
  for (double w : awt_weights(params.delta)) {
    ++step;
    const SubproblemOutcome out = run.solve(
        [&](MasterModel& master) {
          master.set_objective(rho * params.beta1, rho * params.beta2,
                               -rho * (params.beta1 * f1i + params.beta2 * f2i));
          const int u = master.add_extra_variable(0.0, kInfinity, 1.0);
          const double a = params.beta1 * w;
          const double b = params.beta2 * (1.0 - w);
          const int r1 = master.add_aggregate_row(RowSense::kLessEqual, a * f1i, a, 0.0);
          master.add_extra_coefficient(r1, u, -1.0);
          const int r2 = master.add_aggregate_row(RowSense::kLessEqual, b * f2i, 0.0, b);
          master.add_extra_coefficient(r2, u, -1.0);
        },
        "w" + std::to_string(step), &seed);
    run.result().iterations = step;
    if (out.infeasible()) continue;
    if (!out.has_point()) {
      run.abort("AWT subproblem stopped at a limit without an incumbent");
      break;
    }
    seed = run.point(out, out.proven());
    run.record(seed);
  }
  run.record(lex.lex2);
  return run.finish();
}

FrontResult solve_method(const Instance& instance, const MethodConfig& config,
                         const PatternSet* initial) {
  switch (config.method) {
    case Method::kLec: return solve_lec(instance, config, initial);
    case Method::kFpa: return solve_fpa(instance, config, initial);
    case Method::kAwt: return solve_awt(instance, config, initial);
  }
  throw Error(ErrorKind::kInvalidInput, "unknown method");
}

}  // namespace bocsp
