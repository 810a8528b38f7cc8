#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the library code paths they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bocsp/linear_model.hpp"

namespace oracle {

// Solves a dense square system; nullopt when singular.
inline std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a,
                                                      std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-10) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Minimum of an LP with x >= 0 (no finite upper bounds) by enumerating every
// basis of [A | slack]. Returns nullopt when no basic feasible solution exists.
inline std::optional<double> lp_by_basis_enumeration(const bocsp::LinearModel& model) {
  const int n = model.num_variables();
  const int m = model.num_rows();
  std::vector<std::vector<double>> cols;  // dense columns
  std::vector<double> costs;
  for (int j = 0; j < n; ++j) {
    std::vector<double> col(m, 0.0);
    for (const bocsp::Entry& e : model.column(j)) col[e.index] = e.value;
    cols.push_back(col);
    costs.push_back(model.variable(j).cost);
  }
  for (int i = 0; i < m; ++i) {
    const auto sense = model.row(i).sense;
    if (sense == bocsp::RowSense::kEqual) continue;
    std::vector<double> col(m, 0.0);
    col[i] = sense == bocsp::RowSense::kLessEqual ? 1.0 : -1.0;
    cols.push_back(col);
    costs.push_back(0.0);
  }
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = model.row(i).rhs;
  const int total = static_cast<int>(cols.size());
  std::optional<double> best;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pick.size()) == m) {
      std::vector<std::vector<double>> a(m, std::vector<double>(m));
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) a[r][c] = cols[pick[c]][r];
      }
      auto sol = solve_dense(a, rhs);
      if (!sol) return;
      double obj = model.objective_offset();
      for (int c = 0; c < m; ++c) {
        if ((*sol)[c] < -1e-9) return;
        obj += costs[pick[c]] * (*sol)[c];
      }
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int j = start; j < total; ++j) {
      pick.push_back(j);
      choose(j + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best;
}

// Exhaustive MILP: every integer variable ranges over [lower, upper] (finite);
// continuous variables are not supported.
inline std::optional<double> milp_by_enumeration(const bocsp::LinearModel& model) {
  const int n = model.num_variables();
  std::vector<double> x(n);
  std::optional<double> best;
  std::function<void(int)> visit = [&](int j) {
    if (j == n) {
      for (int i = 0; i < model.num_rows(); ++i) {
        const double act = model.row_activity(i, x);
        const auto& row = model.row(i);
        if (row.sense != bocsp::RowSense::kGreaterEqual && act > row.rhs + 1e-9) return;
        if (row.sense != bocsp::RowSense::kLessEqual && act < row.rhs - 1e-9) return;
      }
      const double obj = model.objective_value(x);
      if (!best || obj < *best) best = obj;
      return;
    }
    const auto& v = model.variable(j);
    for (long k = static_cast<long>(std::ceil(v.lower)); k <= static_cast<long>(std::floor(v.upper)); ++k) {
      x[j] = static_cast<double>(k);
      visit(j + 1);
    }
  };
  visit(0);
  return best;
}

// ---------------------------------------------------------------------------
// Pricing

struct KnapsackBest {
  double value = 0.0;
  std::vector<int> counts;
};

// Walks every count array with sum l_i*a_i <= L; keeps the best value and,
// among ties (1e-9), the lexicographically smallest array.
inline KnapsackBest knapsack_by_enumeration(int L, const std::vector<int>& lengths,
                                            const std::vector<double>& values) {
  const int m = static_cast<int>(lengths.size());
  KnapsackBest best;
  best.counts.assign(m, 0);
  std::vector<int> counts(m, 0);
  std::function<void(int, int)> visit = [&](int i, int room) {
    if (i == m) {
      double v = 0.0;
      for (int k = 0; k < m; ++k) v += values[k] * counts[k];
      if (v > best.value + 1e-9 || (std::abs(v - best.value) <= 1e-9 && counts < best.counts)) {
        best.value = v;
        best.counts = counts;
      }
      return;
    }
    for (int a = 0; a * lengths[i] <= room; ++a) {
      counts[i] = a;
      visit(i + 1, room - a * lengths[i]);
    }
    counts[i] = 0;
  };
  visit(0, L);
  return best;
}

struct Piece {
  int length;
  int width;
  double value;
};

// Best two-stage guillotine value: every piece is skipped or put, in one of
// its allowed orientations, into an existing strip or a new one. A strip is
// as wide as its widest piece; strip lengths and the summed strip widths are
// bounded by L and W.
inline double two_stage_by_enumeration(int L, int W, const std::vector<Piece>& pieces,
                                       bool rotation) {
  struct OpenStrip {
    int used_length;
    int width;
  };
  std::vector<OpenStrip> strips;
  double best = 0.0;
  std::function<void(std::size_t, double, int)> visit = [&](std::size_t k, double value,
                                                            int width_sum) {
    if (k == pieces.size()) {
      best = std::max(best, value);
      return;
    }
    visit(k + 1, value, width_sum);  // skip
    const Piece& piece = pieces[k];
    for (int turn = 0; turn < (rotation ? 2 : 1); ++turn) {
      const int along = turn ? piece.width : piece.length;
      const int across = turn ? piece.length : piece.width;
      for (OpenStrip& strip : strips) {
        if (strip.used_length + along > L) continue;
        const int grow = std::max(0, across - strip.width);
        if (width_sum + grow > W) continue;
        const OpenStrip saved = strip;
        strip.used_length += along;
        strip.width = std::max(strip.width, across);
        visit(k + 1, value + piece.value, width_sum + grow);
        strip = saved;
      }
      if (along <= L && width_sum + across <= W) {
        strips.push_back({along, across});
        visit(k + 1, value + piece.value, width_sum + across);
        strips.pop_back();
      }
    }
  };
  visit(0, 0.0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Fronts

using Point = std::pair<long, long>;

inline std::set<Point> pairwise_filter(const std::vector<Point>& points) {
  std::set<Point> kept;
  for (std::size_t a = 0; a < points.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < points.size() && !dominated; ++b) {
      if (points[b] == points[a]) continue;
      dominated = points[b].first <= points[a].first && points[b].second <= points[a].second;
    }
    if (!dominated) kept.insert(points[a]);
  }
  return kept;
}

// Counts the unit cells [a,a+1)x[b,b+1) inside the reference box that some
// point dominates.
inline long hypervolume_by_cells(const std::vector<Point>& front, long r1, long r2) {
  long cells = 0;
  for (long a = 0; a < r1; ++a) {
    for (long b = 0; b < r2; ++b) {
      for (const Point& p : front) {
        if (p.first <= a && p.second <= b) {
          ++cells;
          break;
        }
      }
    }
  }
  return cells;
}

// Every nonzero count vector with sum l_i a_i <= L, in lexicographic order.
inline std::vector<std::vector<int>> feasible_patterns_1d(int L, const std::vector<int>& lengths) {
  const int m = static_cast<int>(lengths.size());
  std::vector<std::vector<int>> patterns;
  std::vector<int> counts(m, 0);
  std::function<void(int, int)> gen = [&](int i, int room) {
    if (i == m) {
      if (std::any_of(counts.begin(), counts.end(), [](int a) { return a > 0; })) {
        patterns.push_back(counts);
      }
      return;
    }
    for (int a = 0; a * lengths[i] <= room; ++a) {
      counts[i] = a;
      gen(i + 1, room - a * lengths[i]);
    }
    counts[i] = 0;
  };
  gen(0, L);
  return patterns;
}

// Exact Pareto front of a 1D instance given as (L, lengths, demands, p).
// Every feasible nonzero pattern is enumerated; a dynamic program over the
// remaining demand vector keeps the nondominated (sum x, sum ceil(x_j/p))
// pairs. A pattern never needs more repetitions than it takes to cover the
// remaining demand, and y_j = ceil(x_j/p) is the cheapest choice of cycles.
inline std::set<Point> pareto_front_1d(int L, const std::vector<int>& lengths,
                                       const std::vector<int>& demands, int p) {
  const int m = static_cast<int>(lengths.size());
  const std::vector<std::vector<int>> patterns = feasible_patterns_1d(L, lengths);

  using State = std::vector<int>;  // remaining demand
  auto insert = [](std::set<Point>& set, Point point) {
    for (const Point& q : set) {
      if (q.first <= point.first && q.second <= point.second) return;
    }
    for (auto it = set.begin(); it != set.end();) {
      if (point.first <= it->first && point.second <= it->second) {
        it = set.erase(it);
      } else {
        ++it;
      }
    }
    set.insert(point);
  };
  std::map<State, std::set<Point>> table;
  table[demands] = {{0, 0}};
  for (const std::vector<int>& a : patterns) {
    std::map<State, std::set<Point>> next = table;
    for (const auto& [state, points] : table) {
      int useful = 0;
      for (int i = 0; i < m; ++i) {
        if (a[i] > 0 && state[i] > 0) useful = std::max(useful, (state[i] + a[i] - 1) / a[i]);
      }
      for (int x = 1; x <= useful; ++x) {
        State after = state;
        for (int i = 0; i < m; ++i) after[i] = std::max(0, after[i] - a[i] * x);
        const long y = (x + p - 1) / p;
        for (const Point& pt : points) insert(next[after], {pt.first + x, pt.second + y});
      }
    }
    table = std::move(next);
  }
  return table[State(m, 0)];
}

}  // namespace oracle
