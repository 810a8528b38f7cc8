#include "bocsp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bocsp/error.hpp"

namespace bocsp {
namespace {

constexpr double kTieEps = 1e-12;
constexpr double kPhaseOneTolerance = 1e-6;

// Dense revised simplex. Columns are laid out as structurals [0, n), row
// slacks [n, n + m) and artificials [n + m, total). Row i reads
// a_i x + s_i = b_i, so a <= row has s_i in [0, inf) and a >= row has
// s_i in (-inf, 0].
class SimplexEngine {
 public:
  SimplexEngine(const LinearModel& model, const LpOptions& options,
                const std::vector<double>* lower, const std::vector<double>* upper)
      : model_(model),
        options_(options),
        n_(model.num_variables()),
        m_(model.num_rows()) {
    lo_.resize(n_ + m_);
    hi_.resize(n_ + m_);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lower ? (*lower)[j] : model.variable(j).lower;
      hi_[j] = upper ? (*upper)[j] : model.variable(j).upper;
    }
    for (int i = 0; i < m_; ++i) {
      switch (model.row(i).sense) {
        case RowSense::kLessEqual: lo_[n_ + i] = 0.0; hi_[n_ + i] = kInfinity; break;
        case RowSense::kGreaterEqual: lo_[n_ + i] = -kInfinity; hi_[n_ + i] = 0.0; break;
        case RowSense::kEqual: lo_[n_ + i] = 0.0; hi_[n_ + i] = 0.0; break;
      }
    }
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) rhs_[i] = model.row(i).rhs;
  }

  LpResult run(const Basis* warm) {
    for (int j = 0; j < n_; ++j) {
      if (lo_[j] > hi_[j] + options_.tolerances.feasibility) {
        LpResult result;
        result.status = LpStatus::kInfeasible;
        return result;
      }
    }
    max_iterations_ = options_.max_iterations > 0
                          ? options_.max_iterations
                          : 50 * (m_ + n_ + m_) + 5000;
    std::optional<LpStatus> status;
    if (warm != nullptr) status = try_warm(*warm);
    if (!status) status = cold(false);
    if (!status) status = cold(true);
    if (!status) {
      throw Error(ErrorKind::kNumericFailure,
                  "simplex failed to converge after anti-cycling restart");
    }
    return assemble(*status);
  }

 private:
  enum class Outcome { kOptimal, kUnbounded, kInfeasible, kFailed };

  int total() const { return static_cast<int>(lo_.size()); }

  template <class F>
  void for_each_entry(int j, F&& f) const {
    if (j < n_) {
      for (const Entry& e : model_.column(j)) f(e.index, e.value);
    } else if (j < n_ + m_) {
      f(j - n_, 1.0);
    } else {
      const int k = j - n_ - m_;
      f(art_row_[k], art_sign_[k]);
    }
  }

  double& binv(int i, int k) { return binv_[static_cast<std::size_t>(k) * m_ + i]; }

  bool is_fixed(int j) const { return lo_[j] == hi_[j]; }

  BasisStatus resting_status(int j) const {
    return std::isfinite(lo_[j]) ? BasisStatus::kAtLower : BasisStatus::kAtUpper;
  }

  double resting_value(int j) const {
    return status_[j] == BasisStatus::kAtUpper ? hi_[j] : lo_[j];
  }

  void ftran(int j, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for_each_entry(j, [&](int r, double v) {
      const double* col = &binv_[static_cast<std::size_t>(r) * m_];
      for (int i = 0; i < m_; ++i) out[i] += v * col[i];
    });
  }

  void compute_duals(std::vector<double>& y) {
    for (int k = 0; k < m_; ++k) {
      const double* col = &binv_[static_cast<std::size_t>(k) * m_];
      double s = 0.0;
      for (int i = 0; i < m_; ++i) s += cost_[head_[i]] * col[i];
      y[k] = s;
    }
  }

  double reduced_cost(int j, const std::vector<double>& y) const {
    double d = cost_[j];
    for_each_entry(j, [&](int r, double v) { d -= y[r] * v; });
    return d;
  }

  // Gauss-Jordan inverse of a row-major k x k matrix, partial pivoting.
  static bool invert_dense(std::vector<double>& work, int k, std::vector<double>& inv) {
    const auto at = [k](int r, int c) { return static_cast<std::size_t>(r) * k + c; };
    inv.assign(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) inv[at(i, i)] = 1.0;
    for (int c = 0; c < k; ++c) {
      int piv = c;
      double best = std::abs(work[at(c, c)]);
      for (int r = c + 1; r < k; ++r) {
        const double v = std::abs(work[at(r, c)]);
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (best < 1e-11) return false;
      if (piv != c) {
        std::swap_ranges(work.begin() + static_cast<long>(at(piv, 0)),
                         work.begin() + static_cast<long>(at(piv + 1, 0)),
                         work.begin() + static_cast<long>(at(c, 0)));
        std::swap_ranges(inv.begin() + static_cast<long>(at(piv, 0)),
                         inv.begin() + static_cast<long>(at(piv + 1, 0)),
                         inv.begin() + static_cast<long>(at(c, 0)));
      }
      const double d = work[at(c, c)];
      for (int j = 0; j < k; ++j) {
        work[at(c, j)] /= d;
        inv[at(c, j)] /= d;
      }
      for (int r = 0; r < k; ++r) {
        if (r == c) continue;
        const double f = work[at(r, c)];
        if (f == 0.0) continue;
        for (int j = 0; j < k; ++j) {
          work[at(r, j)] -= f * work[at(c, j)];
          inv[at(r, j)] -= f * inv[at(c, j)];
        }
      }
    }
    return true;
  }

  // Basic slacks and artificials are signed unit columns, so only the block
  // of basic structurals on the rows those units leave uncovered is inverted:
  // with B = [[D, A_uk], [0, A_nk]] (D diagonal) the inverse is
  // [[D^-1, -D^-1 A_uk M], [0, M]] for M = A_nk^-1.
  bool refactor() {
    std::vector<int> unit_position(m_, -1);  // row -> basis position of its unit column
    std::vector<double> unit_sign(m_, 0.0);
    std::vector<int> structural;             // basis positions holding structurals
    for (int p = 0; p < m_; ++p) {
      const int j = head_[p];
      if (j < n_) {
        structural.push_back(p);
        continue;
      }
      int row = -1;
      double sign = 0.0;
      for_each_entry(j, [&](int r, double v) {
        row = r;
        sign = v;
      });
      if (unit_position[row] >= 0) return false;
      unit_position[row] = p;
      unit_sign[row] = sign;
    }
    const int k = static_cast<int>(structural.size());
    std::vector<int> open_rows;  // rows not covered by a unit column
    std::vector<int> open_index(m_, -1);
    for (int r = 0; r < m_; ++r) {
      if (unit_position[r] < 0) {
        open_index[r] = static_cast<int>(open_rows.size());
        open_rows.push_back(r);
      }
    }
    if (static_cast<int>(open_rows.size()) != k) return false;

    std::vector<double> block(static_cast<std::size_t>(k) * k, 0.0);  // rows: open rows
    for (int c = 0; c < k; ++c) {
      for_each_entry(head_[structural[c]], [&](int r, double v) {
        if (open_index[r] >= 0) block[static_cast<std::size_t>(open_index[r]) * k + c] = v;
      });
    }
    std::vector<double> inv;  // row c maps open-row index to structural c
    if (!invert_dense(block, k, inv)) return false;

    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      if (unit_position[r] >= 0) binv(unit_position[r], r) = 1.0 / unit_sign[r];
    }
    for (int c = 0; c < k; ++c) {
      const double* m_row = &inv[static_cast<std::size_t>(c) * k];
      for (int t = 0; t < k; ++t) binv(structural[c], open_rows[t]) = m_row[t];
      for_each_entry(head_[structural[c]], [&](int r, double v) {
        if (unit_position[r] < 0) return;
        const int p = unit_position[r];
        const double f = v / unit_sign[r];
        for (int t = 0; t < k; ++t) binv(p, open_rows[t]) -= f * m_row[t];
      });
    }
    since_refactor_ = 0;
    return true;
  }

  void recompute_primal() {
    std::vector<double> r = rhs_;
    for (int j = 0; j < total(); ++j) {
      if (status_[j] == BasisStatus::kBasic) continue;
      x_[j] = resting_value(j);
      if (x_[j] != 0.0) for_each_entry(j, [&](int row, double v) { r[row] -= v * x_[j]; });
    }
    for (int p = 0; p < m_; ++p) {
      double s = 0.0;
      for (int k = 0; k < m_; ++k) s += binv(p, k) * r[k];
      x_[head_[p]] = s;
    }
  }

  void pivot(int r, const std::vector<double>& alpha) {
    const double ar = alpha[r];
    for (int k = 0; k < m_; ++k) {
      double* col = &binv_[static_cast<std::size_t>(k) * m_];
      const double p = col[r] / ar;
      if (p != 0.0) {
        for (int i = 0; i < m_; ++i) col[i] -= alpha[i] * p;
      }
      col[r] = p;
    }
    ++since_refactor_;
  }

  bool maybe_refactor() {
    if (since_refactor_ < options_.refactor_interval) return true;
    if (!refactor()) return false;
    recompute_primal();
    return true;
  }

  bool primal_feasible() const {
    const double tol = options_.tolerances.feasibility;
    for (int p = 0; p < m_; ++p) {
      const int j = head_[p];
      if (x_[j] < lo_[j] - tol || x_[j] > hi_[j] + tol) return false;
    }
    return true;
  }

  bool dual_feasible(const std::vector<double>& y) const {
    const double tol = options_.tolerances.optimality;
    for (int j = 0; j < total(); ++j) {
      if (status_[j] == BasisStatus::kBasic || is_fixed(j)) continue;
      const double d = reduced_cost(j, y);
      if (status_[j] == BasisStatus::kAtLower && d < -tol) return false;
      if (status_[j] == BasisStatus::kAtUpper && d > tol) return false;
    }
    return true;
  }

  Outcome primal(bool force_bland) {
    const double dtol = options_.tolerances.optimality;
    const double ptol = options_.tolerances.pivot;
    std::vector<double> y(m_), alpha(m_);
    int degenerate = 0;
    bool bland = force_bland;
    const int bland_trigger = 2 * (m_ + total());
    while (true) {
      if (++iterations_ - attempt_start_ > max_iterations_) return Outcome::kFailed;
      if (!maybe_refactor()) return Outcome::kFailed;
      compute_duals(y);

      int q = -1;
      int dir = 0;
      double best = 0.0;
      for (int j = 0; j < total(); ++j) {
        if (status_[j] == BasisStatus::kBasic || is_fixed(j)) continue;
        const double d = reduced_cost(j, y);
        double score = 0.0;
        int candidate_dir = 0;
        if (status_[j] == BasisStatus::kAtLower && d < -dtol) {
          score = -d;
          candidate_dir = 1;
        } else if (status_[j] == BasisStatus::kAtUpper && d > dtol) {
          score = d;
          candidate_dir = -1;
        }
        if (candidate_dir == 0) continue;
        if (bland) {
          q = j;
          dir = candidate_dir;
          break;
        }
        if (score > best) {
          best = score;
          q = j;
          dir = candidate_dir;
        }
      }
      if (q < 0) return Outcome::kOptimal;

      ftran(q, alpha);
      double step = hi_[q] - lo_[q];
      if (!std::isfinite(step)) step = kInfinity;
      int leave = -1;
      bool leave_to_lower = false;
      for (int i = 0; i < m_; ++i) {
        if (std::abs(alpha[i]) <= ptol) continue;
        const double a = dir * alpha[i];
        const int j = head_[i];
        double ratio;
        bool to_lower;
        if (a > 0.0) {
          if (!std::isfinite(lo_[j])) continue;
          ratio = std::max(0.0, x_[j] - lo_[j]) / a;
          to_lower = true;
        } else {
          if (!std::isfinite(hi_[j])) continue;
          ratio = std::max(0.0, hi_[j] - x_[j]) / (-a);
          to_lower = false;
        }
        bool take = false;
        if (ratio < step - kTieEps) {
          take = true;
        } else if (leave >= 0 && ratio <= step + kTieEps) {
          take = bland ? head_[i] < head_[leave]
                       : std::abs(alpha[i]) > std::abs(alpha[leave]);
        }
        if (take) {
          step = ratio;
          leave = i;
          leave_to_lower = to_lower;
        }
      }
      if (!std::isfinite(step)) return Outcome::kUnbounded;

      if (step > 0.0) {
        x_[q] += dir * step;
        for (int i = 0; i < m_; ++i) x_[head_[i]] -= dir * step * alpha[i];
      }
      if (leave < 0) {
        status_[q] = dir > 0 ? BasisStatus::kAtUpper : BasisStatus::kAtLower;
        x_[q] = resting_value(q);
      } else {
        const int out = head_[leave];
        status_[out] = leave_to_lower ? BasisStatus::kAtLower : BasisStatus::kAtUpper;
        x_[out] = resting_value(out);
        head_[leave] = q;
        status_[q] = BasisStatus::kBasic;
        pivot(leave, alpha);
      }

      if (step <= kTieEps) {
        if (++degenerate > bland_trigger) bland = true;
      } else {
        degenerate = 0;
        bland = force_bland;
      }
    }
  }

  Outcome dual() {
    const double ftol = options_.tolerances.feasibility;
    const double ptol = options_.tolerances.pivot;
    std::vector<double> y(m_), alpha(m_), rho(m_);
    // After a run of degenerate pivots switch to the smallest-index rule on
    // both sides, which cannot cycle.
    int degenerate = 0;
    bool bland = false;
    while (true) {
      if (++iterations_ - attempt_start_ > max_iterations_) return Outcome::kFailed;
      if (!maybe_refactor()) return Outcome::kFailed;

      int r = -1;
      double worst = ftol;
      for (int p = 0; p < m_; ++p) {
        const int j = head_[p];
        double infeasibility = 0.0;
        if (x_[j] < lo_[j] - ftol) infeasibility = lo_[j] - x_[j];
        if (x_[j] > hi_[j] + ftol) infeasibility = x_[j] - hi_[j];
        if (infeasibility <= ftol) continue;
        if (bland ? (r < 0 || j < head_[r]) : infeasibility > worst) {
          worst = infeasibility;
          r = p;
        }
      }
      if (r < 0) return Outcome::kOptimal;

      compute_duals(y);
      for (int k = 0; k < m_; ++k) rho[k] = binv(r, k);
      const int out = head_[r];
      const bool below = x_[out] < lo_[out];
      const double target = below ? lo_[out] : hi_[out];

      int q = -1;
      double best_ratio = kInfinity;
      double best_alpha = 0.0;
      for (int j = 0; j < total(); ++j) {
        if (status_[j] == BasisStatus::kBasic || is_fixed(j)) continue;
        double a = 0.0;
        for_each_entry(j, [&](int row, double v) { a += rho[row] * v; });
        if (std::abs(a) <= ptol) continue;
        const bool at_lower = status_[j] == BasisStatus::kAtLower;
        const bool eligible = below ? (at_lower ? a < 0.0 : a > 0.0)
                                    : (at_lower ? a > 0.0 : a < 0.0);
        if (!eligible) continue;
        const double d = reduced_cost(j, y);
        const double slack = at_lower ? std::max(0.0, d) : std::max(0.0, -d);
        const double ratio = slack / std::abs(a);
        if (ratio < best_ratio - kTieEps ||
            (!bland && ratio <= best_ratio + kTieEps && std::abs(a) > best_alpha)) {
          best_ratio = ratio;
          best_alpha = std::abs(a);
          q = j;
        }
      }
      if (q < 0) return Outcome::kInfeasible;
      degenerate = best_ratio <= kTieEps ? degenerate + 1 : 0;
      if (degenerate > 50) bland = true;

      ftran(q, alpha);
      if (std::abs(alpha[r]) <= ptol) return Outcome::kFailed;
      const double delta = (x_[out] - target) / alpha[r];
      x_[q] += delta;
      for (int i = 0; i < m_; ++i) x_[head_[i]] -= delta * alpha[i];
      status_[out] = below ? BasisStatus::kAtLower : BasisStatus::kAtUpper;
      x_[out] = target;
      head_[r] = q;
      status_[q] = BasisStatus::kBasic;
      pivot(r, alpha);
    }
  }

  void set_real_costs() {
    cost_.assign(total(), 0.0);
    for (int j = 0; j < n_; ++j) cost_[j] = model_.variable(j).cost;
  }

  std::optional<LpStatus> try_warm(const Basis& warm) {
    attempt_start_ = iterations_;
    art_row_.clear();
    art_sign_.clear();
    status_.assign(total(), BasisStatus::kAtLower);
    int basics = 0;
    for (int j = 0; j < n_; ++j) {
      status_[j] = j < static_cast<int>(warm.variables.size()) ? warm.variables[j]
                                                               : resting_status(j);
    }
    for (int i = 0; i < m_; ++i) {
      status_[n_ + i] = i < static_cast<int>(warm.rows.size()) ? warm.rows[i]
                                                               : BasisStatus::kBasic;
    }
    head_.clear();
    for (int j = 0; j < total(); ++j) {
      if (status_[j] == BasisStatus::kBasic) {
        head_.push_back(j);
        ++basics;
      } else if (status_[j] == BasisStatus::kAtLower && !std::isfinite(lo_[j])) {
        status_[j] = BasisStatus::kAtUpper;
      } else if (status_[j] == BasisStatus::kAtUpper && !std::isfinite(hi_[j])) {
        status_[j] = BasisStatus::kAtLower;
      }
    }
    if (basics != m_) return std::nullopt;
    x_.assign(total(), 0.0);
    set_real_costs();
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    if (!refactor()) return std::nullopt;
    recompute_primal();

    if (primal_feasible()) {
      const Outcome outcome = primal(false);
      if (outcome == Outcome::kOptimal) return LpStatus::kOptimal;
      if (outcome == Outcome::kUnbounded) return LpStatus::kUnbounded;
      return std::nullopt;
    }
    std::vector<double> y(m_);
    compute_duals(y);
    if (!dual_feasible(y)) return std::nullopt;
    const Outcome outcome = dual();
    if (outcome == Outcome::kInfeasible) return LpStatus::kInfeasible;
    if (outcome != Outcome::kOptimal) return std::nullopt;
    const Outcome cleanup = primal(false);
    if (cleanup == Outcome::kOptimal) return LpStatus::kOptimal;
    if (cleanup == Outcome::kUnbounded) return LpStatus::kUnbounded;
    return std::nullopt;
  }

  std::optional<LpStatus> cold(bool force_bland) {
    const double ftol = options_.tolerances.feasibility;
    attempt_start_ = iterations_;
    lo_.resize(n_ + m_);
    hi_.resize(n_ + m_);
    art_row_.clear();
    art_sign_.clear();
    status_.assign(n_ + m_, BasisStatus::kAtLower);
    x_.assign(n_ + m_, 0.0);
    for (int j = 0; j < n_; ++j) {
      status_[j] = resting_status(j);
      x_[j] = resting_value(j);
    }
    std::vector<double> residual = rhs_;
    for (int j = 0; j < n_; ++j) {
      if (x_[j] != 0.0) for_each_entry(j, [&](int r, double v) { residual[r] -= v * x_[j]; });
    }
    head_.assign(m_, -1);
    std::vector<double> art_value;
    for (int i = 0; i < m_; ++i) {
      const int s = n_ + i;
      if (residual[i] >= lo_[s] - ftol && residual[i] <= hi_[s] + ftol) {
        status_[s] = BasisStatus::kBasic;
        x_[s] = residual[i];
        head_[i] = s;
      } else {
        const bool above = residual[i] > hi_[s];
        status_[s] = above ? BasisStatus::kAtUpper : BasisStatus::kAtLower;
        x_[s] = above ? hi_[s] : lo_[s];
        const double excess = residual[i] - x_[s];
        art_row_.push_back(i);
        art_sign_.push_back(excess > 0.0 ? 1.0 : -1.0);
        art_value.push_back(std::abs(excess));
      }
    }
    const int na = static_cast<int>(art_row_.size());
    for (int k = 0; k < na; ++k) {
      lo_.push_back(0.0);
      hi_.push_back(kInfinity);
      status_.push_back(BasisStatus::kBasic);
      x_.push_back(art_value[k]);
      head_[art_row_[k]] = n_ + m_ + k;
    }
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) binv(i, i) = 1.0;
    for (int k = 0; k < na; ++k) binv(art_row_[k], art_row_[k]) = art_sign_[k];
    since_refactor_ = 0;

    if (na > 0) {
      cost_.assign(total(), 0.0);
      for (int k = 0; k < na; ++k) cost_[n_ + m_ + k] = 1.0;
      if (primal(force_bland) != Outcome::kOptimal) return std::nullopt;
      double infeasibility = 0.0;
      for (int k = 0; k < na; ++k) infeasibility += x_[n_ + m_ + k];
      if (infeasibility > kPhaseOneTolerance) return LpStatus::kInfeasible;
      drive_out_artificials();
      for (int k = 0; k < na; ++k) {
        lo_[n_ + m_ + k] = 0.0;
        hi_[n_ + m_ + k] = 0.0;
        if (status_[n_ + m_ + k] != BasisStatus::kBasic) x_[n_ + m_ + k] = 0.0;
      }
    }
    set_real_costs();
    const Outcome outcome = primal(force_bland);
    if (outcome == Outcome::kOptimal) return LpStatus::kOptimal;
    if (outcome == Outcome::kUnbounded) return LpStatus::kUnbounded;
    return std::nullopt;
  }

  void drive_out_artificials() {
    std::vector<double> rho(m_), alpha(m_);
    for (int p = 0; p < m_; ++p) {
      if (head_[p] < n_ + m_) continue;
      for (int k = 0; k < m_; ++k) rho[k] = binv(p, k);
      int q = -1;
      double best = 1e-7;
      for (int j = 0; j < n_ + m_; ++j) {
        if (status_[j] == BasisStatus::kBasic) continue;
        double a = 0.0;
        for_each_entry(j, [&](int r, double v) { a += rho[r] * v; });
        if (std::abs(a) > best) {
          best = std::abs(a);
          q = j;
        }
      }
      if (q < 0) continue;  // redundant row; the artificial stays basic at zero
      ftran(q, alpha);
      const int out = head_[p];
      const double delta = x_[out] / alpha[p];
      x_[q] += delta;
      for (int i = 0; i < m_; ++i) x_[head_[i]] -= delta * alpha[i];
      status_[out] = BasisStatus::kAtLower;
      x_[out] = 0.0;
      head_[p] = q;
      status_[q] = BasisStatus::kBasic;
      pivot(p, alpha);
    }
  }

  LpResult assemble(LpStatus status) {
    LpResult result;
    result.status = status;
    result.iterations = iterations_;
    if (status != LpStatus::kOptimal) return result;
    result.values.assign(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      if (status_[j] != BasisStatus::kBasic) result.values[j] = resting_value(j);
    }
    result.objective = model_.objective_value(result.values);
    std::vector<double> y(m_);
    compute_duals(y);
    result.duals = y;
    result.reduced_costs.resize(n_);
    for (int j = 0; j < n_; ++j) result.reduced_costs[j] = reduced_cost(j, y);
    result.basis.variables.assign(status_.begin(), status_.begin() + n_);
    result.basis.rows.assign(status_.begin() + n_, status_.begin() + n_ + m_);
    return result;
  }

  const LinearModel& model_;
  const LpOptions& options_;
  const int n_;
  const int m_;
  std::vector<double> lo_, hi_, cost_, x_, rhs_;
  std::vector<BasisStatus> status_;
  std::vector<int> head_;
  std::vector<double> binv_;  // column-major m x m
  std::vector<int> art_row_;
  std::vector<double> art_sign_;
  int since_refactor_ = 0;
  int iterations_ = 0;
  int attempt_start_ = 0;
  int max_iterations_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearModel& model, const LpOptions& options, const Basis* warm,
                  const std::vector<double>* lower, const std::vector<double>* upper) {
  SimplexEngine engine(model, options, lower, upper);
  return engine.run(warm);
}

}  // namespace bocsp
