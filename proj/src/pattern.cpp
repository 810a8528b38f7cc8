#include "bocsp/pattern.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bocsp {

int Pattern::total_items() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

double Pattern::value(const std::vector<double>& item_values) const {
  double total = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) total += item_values[i] * counts[i];
  }
  return total;
}

bool is_feasible_pattern(const Instance& instance, const Pattern& pattern) {
  const int m = instance.item_count();
  if (static_cast<int>(pattern.counts.size()) != m) return false;
  bool any = false;
  for (int a : pattern.counts) {
    if (a < 0) return false;
    any = any || a > 0;
  }
  if (!any) return false;

  if (!instance.is_2d()) {
    long used = 0;
    for (int i = 0; i < m; ++i) {
      used += static_cast<long>(instance.item(i).length) * pattern.counts[i];
    }
    return used <= instance.object_length();
  }

  if (pattern.layout.empty()) return false;
  std::vector<int> from_layout(m, 0);
  long width_used = 0;
  for (const Strip& strip : pattern.layout) {
    if (strip.width <= 0 || strip.items.empty()) return false;
    width_used += strip.width;
    long length_used = 0;
    for (const Placement& placement : strip.items) {
      if (placement.item < 0 || placement.item >= m) return false;
      if (placement.rotated && !instance.allow_rotation()) return false;
      const ItemType& item = instance.item(placement.item);
      const int along = placement.rotated ? item.width : item.length;
      const int across = placement.rotated ? item.length : item.width;
      if (across > strip.width) return false;
      length_used += along;
      ++from_layout[placement.item];
    }
    if (length_used > instance.object_length()) return false;
  }
  if (width_used > instance.object_width()) return false;
  return from_layout == pattern.counts;
}

bool PatternSet::insert(Pattern pattern) {
  if (!keys_.insert(pattern.counts).second) return false;
  patterns_.push_back(std::move(pattern));
  return true;
}

bool PatternSet::contains(const std::vector<int>& counts) const {
  return keys_.count(counts) > 0;
}

PatternSet enumerate_maximal_patterns_1d(const Instance& instance) {
  const int m = instance.item_count();
  const int capacity = instance.object_length();
  int shortest = capacity + 1;
  for (const ItemType& item : instance.items()) shortest = std::min(shortest, item.length);

  PatternSet result;
  std::vector<int> counts(m, 0);
  std::function<void(int, int)> visit = [&](int i, int remaining) {
    if (i == m) {
      // Maximal: the shortest item no longer fits.
      if (remaining < shortest && std::any_of(counts.begin(), counts.end(),
                                              [](int a) { return a > 0; })) {
        Pattern pattern;
        pattern.counts = counts;
        pattern.source = PatternSource::kEnumerated;
        result.insert(std::move(pattern));
      }
      return;
    }
    const int length = instance.item(i).length;
    for (int a = remaining / length; a >= 0; --a) {
      counts[i] = a;
      visit(i + 1, remaining - a * length);
    }
    counts[i] = 0;
  };
  visit(0, capacity);
  return result;
}

}  // namespace bocsp
