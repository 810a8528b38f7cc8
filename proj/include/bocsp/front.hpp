#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bocsp {

// A pattern used by a front solution together with its frequencies.
struct UsedPattern {
  std::vector<int> counts;
  long x = 0;
  long y = 0;

  bool operator==(const UsedPattern&) const = default;
};

struct FrontPoint {
  long f1 = 0;  // objects
  long f2 = 0;  // saw cycles
  bool proven = true;  // false when a subproblem stopped at a limit
  std::string method;
  std::string instance;
  std::vector<UsedPattern> solution;
};

// Points sorted by ascending f1 with strictly decreasing f2.
using Front = std::vector<FrontPoint>;

// Drops every point weakly dominated by another one. Of equal points the
// earliest in the input survives.
Front nondominated_filter(std::vector<FrontPoint> points);

// Filter of the concatenation, in argument order. All points must belong to
// the same instance (invalid-input otherwise).
Front union_fronts(const std::vector<Front>& fronts);

// Area dominated by the front inside the box bounded by `reference`, which
// must be strictly worse than every point in both objectives.
double hypervolume(const Front& front, std::pair<double, double> reference);

// (max f1 + 1, max f2 + 1) over all given fronts.
std::pair<double, double> reference_point(const std::vector<Front>& fronts);

struct MetricsInput {
  long subproblems = 0;
  double seconds = 0.0;
  // Lexicographic points of the run; the front's end points are used when
  // the method did not compute them.
  std::optional<std::pair<long, long>> lex1, lex2;
};

struct MetricsReport {
  long cardinality = 0;        // sigma 1
  double hypervolume = 0.0;    // sigma 2
  long amplitude_objects = 0;  // sigma 3, objects
  long amplitude_cycles = 0;   // sigma 3, cycles
  long subproblems = 0;        // sigma 4
  double per_second = 0.0;     // sigma 5
  bool per_second_defined = true;
  double per_subproblem = 0.0;  // sigma 6
  std::pair<double, double> reference{0.0, 0.0};
};

MetricsReport metrics(const Front& front, const MetricsInput& input,
                      std::pair<double, double> reference);

enum class ProfileSense { kMaximize, kMinimize };

struct ProfileCell {
  std::string instance;
  std::string method;
  std::optional<double> value;  // nullopt marks a failed run
};

// Dolan-More profile: for each method, (tau, fraction of instances whose
// ratio to the best method is <= tau) at every finite ratio that occurs.
std::map<std::string, std::vector<std::pair<double, double>>> performance_profile(
    const std::vector<ProfileCell>& cells, ProfileSense sense);

}  // namespace bocsp
