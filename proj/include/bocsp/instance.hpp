#pragma once

#include <string>
#include <vector>

namespace bocsp {

enum class Dimension { kOne, kTwo };

// Saw capacity p = floor(h / t): how many stacked objects one cycle can cut.
int saw_capacity(double saw_height, double thickness);

struct ItemType {
  int length = 0;
  int width = 0;  // 0 for one-dimensional instances
  int demand = 0;

  bool operator==(const ItemType&) const = default;
};

// Immutable problem data. Construct through the factories, which validate the
// geometry and merge items with identical dimensions by summing demand.
class Instance {
 public:
  static Instance one_dimensional(std::string id, int object_length,
                                  std::vector<ItemType> items,
                                  int saw_capacity);
  static Instance two_dimensional(std::string id, int object_length,
                                  int object_width, std::vector<ItemType> items,
                                  int saw_capacity, bool allow_rotation);

  Dimension kind() const { return kind_; }
  bool is_2d() const { return kind_ == Dimension::kTwo; }
  const std::string& id() const { return id_; }
  int object_length() const { return object_length_; }
  int object_width() const { return object_width_; }
  int item_count() const { return static_cast<int>(items_.size()); }
  const std::vector<ItemType>& items() const { return items_; }
  const ItemType& item(int i) const { return items_[i]; }
  int saw_capacity() const { return saw_capacity_; }
  bool allow_rotation() const { return allow_rotation_; }
  int max_demand() const;

  // ceil(d_i / p), the right-hand side of the cycle-demand rows.
  int cycle_demand(int i) const;

  Instance with_saw_capacity(int p) const;
  Instance with_id(std::string id) const;

  bool operator==(const Instance&) const = default;

 private:
  Instance() = default;
  void validate_and_merge();

  Dimension kind_ = Dimension::kOne;
  std::string id_;
  int object_length_ = 0;
  int object_width_ = 0;
  std::vector<ItemType> items_;
  int saw_capacity_ = 1;
  bool allow_rotation_ = false;
};

}  // namespace bocsp
