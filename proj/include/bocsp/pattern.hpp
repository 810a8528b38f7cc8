#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "bocsp/instance.hpp"

namespace bocsp {

enum class PatternSource { kHomogeneous, kPriced, kEnumerated };

struct Placement {
  int item = 0;
  bool rotated = false;

  bool operator==(const Placement&) const = default;
};

// One first-stage strip of a two-stage guillotine layout. Items are laid out
// along the object length; the strip spans `width` across the object width.
struct Strip {
  int width = 0;
  std::vector<Placement> items;

  bool operator==(const Strip&) const = default;
};

struct Pattern {
  std::vector<int> counts;
  std::vector<Strip> layout;  // empty for 1D patterns
  PatternSource source = PatternSource::kPriced;

  // Equality looks at counts only; the master model never sees the layout.
  bool operator==(const Pattern& other) const { return counts == other.counts; }

  int total_items() const;
  double value(const std::vector<double>& item_values) const;
};

// Re-checks pattern geometry from scratch (no trust in how it was produced).
bool is_feasible_pattern(const Instance& instance, const Pattern& pattern);

// Insertion-ordered set of patterns keyed by count array.
class PatternSet {
 public:
  PatternSet() = default;

  // Returns false when a pattern with the same counts is already present.
  bool insert(Pattern pattern);
  bool contains(const std::vector<int>& counts) const;

  int size() const { return static_cast<int>(patterns_.size()); }
  bool empty() const { return patterns_.empty(); }
  const Pattern& operator[](int j) const { return patterns_[j]; }
  const std::vector<Pattern>& patterns() const { return patterns_; }

  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

 private:
  std::vector<Pattern> patterns_;
  std::set<std::vector<int>> keys_;
};

// Every nonzero 1D pattern with no room left for another item.
PatternSet enumerate_maximal_patterns_1d(const Instance& instance);

}  // namespace bocsp
