#include "bocsp/front.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "bocsp/error.hpp"

namespace bocsp {

Front nondominated_filter(std::vector<FrontPoint> points) {
  std::stable_sort(points.begin(), points.end(), [](const FrontPoint& a, const FrontPoint& b) {
    if (a.f1 != b.f1) return a.f1 < b.f1;
    return a.f2 < b.f2;
  });
  Front front;
  for (FrontPoint& point : points) {
    if (!front.empty() && point.f2 >= front.back().f2) continue;
    front.push_back(std::move(point));
  }
  return front;
}

Front union_fronts(const std::vector<Front>& fronts) {
  std::vector<FrontPoint> all;
  for (const Front& front : fronts) {
    for (const FrontPoint& point : front) {
      if (!all.empty() && point.instance != all.front().instance) {
        throw Error(ErrorKind::kInvalidInput, "cannot unite fronts of different instances (" +
                                                  all.front().instance + ", " + point.instance +
                                                  ")");
      }
      all.push_back(point);
    }
  }
  return nondominated_filter(std::move(all));
}

double hypervolume(const Front& front, std::pair<double, double> reference) {
  const Front sorted = nondominated_filter(front);
  for (const FrontPoint& point : sorted) {
    if (!(reference.first > point.f1) || !(reference.second > point.f2)) {
      throw Error(ErrorKind::kInvalidInput, "reference point does not bound the front");
    }
  }
  double volume = 0.0;
  double previous_f2 = reference.second;
  for (const FrontPoint& point : sorted) {
    volume += (reference.first - point.f1) * (previous_f2 - point.f2);
    previous_f2 = point.f2;
  }
  return volume;
}

std::pair<double, double> reference_point(const std::vector<Front>& fronts) {
  long max1 = 0, max2 = 0;
  for (const Front& front : fronts) {
    for (const FrontPoint& point : front) {
      max1 = std::max(max1, point.f1);
      max2 = std::max(max2, point.f2);
    }
  }
  return {static_cast<double>(max1 + 1), static_cast<double>(max2 + 1)};
}

MetricsReport metrics(const Front& front, const MetricsInput& input,
                      std::pair<double, double> reference) {
  MetricsReport report;
  report.reference = reference;
  report.cardinality = static_cast<long>(front.size());
  report.hypervolume = hypervolume(front, reference);
  report.subproblems = input.subproblems;
  auto lex1 = input.lex1;
  auto lex2 = input.lex2;
  if (!lex1 && !front.empty()) lex1 = std::make_pair(front.front().f1, front.front().f2);
  if (!lex2 && !front.empty()) lex2 = std::make_pair(front.back().f1, front.back().f2);
  if (lex1 && lex2) {
    report.amplitude_objects = lex2->first - lex1->first;
    report.amplitude_cycles = lex1->second - lex2->second;
  }
  if (report.cardinality == 0) {
    report.per_second = 0.0;
    report.per_subproblem = 0.0;
    return report;
  }
  if (input.seconds > 0.0) {
    report.per_second = report.cardinality / input.seconds;
  } else {
    report.per_second_defined = false;
  }
  report.per_subproblem =
      input.subproblems > 0 ? static_cast<double>(report.cardinality) / input.subproblems : 0.0;
  return report;
}

std::map<std::string, std::vector<std::pair<double, double>>> performance_profile(
    const std::vector<ProfileCell>& cells, ProfileSense sense) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::set<std::string> methods, instances;
  std::map<std::string, double> best;
  for (const ProfileCell& cell : cells) {
    methods.insert(cell.method);
    instances.insert(cell.instance);
    if (!cell.value) continue;
    const double v = *cell.value;
    if (!std::isfinite(v)) throw Error(ErrorKind::kInvalidInput, "profile value is not finite");
    if (sense == ProfileSense::kMaximize && v <= 0.0) {
      throw Error(ErrorKind::kInvalidInput, "maximized profile metric must be positive");
    }
    if (sense == ProfileSense::kMinimize && v < 0.0) {
      throw Error(ErrorKind::kInvalidInput, "minimized profile metric must be non-negative");
    }
    auto it = best.find(cell.instance);
    if (it == best.end()) {
      best[cell.instance] = v;
    } else {
      it->second = sense == ProfileSense::kMaximize ? std::max(it->second, v)
                                                    : std::min(it->second, v);
    }
  }
  std::map<std::string, std::vector<double>> ratios;
  std::set<double> taus;
  for (const ProfileCell& cell : cells) {
    double r = kInf;
    if (cell.value) {
      const double b = best[cell.instance];
      const double v = *cell.value;
      if (sense == ProfileSense::kMaximize) {
        r = b / v;
      } else if (v == b) {
        r = 1.0;
      } else {
        r = b > 0.0 ? v / b : kInf;
      }
    }
    ratios[cell.method].push_back(r);
    if (std::isfinite(r)) taus.insert(r);
  }
  const double total = static_cast<double>(instances.size());
  std::map<std::string, std::vector<std::pair<double, double>>> curves;
  for (const std::string& method : methods) {
    const std::vector<double>& rs = ratios[method];
    auto& curve = curves[method];
    for (double tau : taus) {
      const auto within = std::count_if(rs.begin(), rs.end(), [&](double r) { return r <= tau; });
      curve.emplace_back(tau, static_cast<double>(within) / total);
    }
  }
  return curves;
}

}  // namespace bocsp
