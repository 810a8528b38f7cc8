#include "bocsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "bocsp/error.hpp"

namespace bocsp {

int saw_capacity(double saw_height, double thickness) {
  if (!(thickness > 0.0) || !(saw_height >= thickness) ||
      !std::isfinite(saw_height)) {
    throw Error(ErrorKind::kInvalidInput,
                "saw capacity needs h >= t > 0");
  }
  return static_cast<int>(std::floor(saw_height / thickness));
}

Instance Instance::one_dimensional(std::string id, int object_length,
                                   std::vector<ItemType> items,
                                   int saw_capacity) {
  Instance instance;
  instance.kind_ = Dimension::kOne;
  instance.id_ = std::move(id);
  instance.object_length_ = object_length;
  instance.items_ = std::move(items);
  for (ItemType& item : instance.items_) item.width = 0;
  instance.saw_capacity_ = saw_capacity;
  instance.validate_and_merge();
  return instance;
}

Instance Instance::two_dimensional(std::string id, int object_length,
                                   int object_width,
                                   std::vector<ItemType> items,
                                   int saw_capacity, bool allow_rotation) {
  Instance instance;
  instance.kind_ = Dimension::kTwo;
  instance.id_ = std::move(id);
  instance.object_length_ = object_length;
  instance.object_width_ = object_width;
  instance.items_ = std::move(items);
  instance.saw_capacity_ = saw_capacity;
  instance.allow_rotation_ = allow_rotation;
  instance.validate_and_merge();
  return instance;
}

void Instance::validate_and_merge() {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidInput, what);
  };
  if (object_length_ < 1) fail("object length must be positive");
  if (is_2d() && object_width_ < 1) fail("object width must be positive");
  if (saw_capacity_ < 1) fail("saw capacity must be at least 1");
  if (items_.empty()) fail("instance needs at least one item type");

  std::vector<ItemType> merged;
  std::map<std::pair<int, int>, std::size_t> seen;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const ItemType& item = items_[i];
    const std::string where = "item " + std::to_string(i + 1) + ": ";
    if (item.length < 1) fail(where + "length must be positive");
    if (item.demand < 1) fail(where + "demand must be positive");
    if (!is_2d()) {
      if (item.length > object_length_) fail(where + "longer than the object");
    } else {
      if (item.width < 1) fail(where + "width must be positive");
      const bool fits = item.length <= object_length_ && item.width <= object_width_;
      const bool fits_rotated = allow_rotation_ && item.width <= object_length_ &&
                                item.length <= object_width_;
      if (!fits && !fits_rotated) fail(where + "does not fit the object");
    }
    const auto key = std::make_pair(item.length, item.width);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, merged.size());
      merged.push_back(item);
    } else {
      merged[it->second].demand += item.demand;
    }
  }
  items_ = std::move(merged);
}

int Instance::max_demand() const {
  int best = 0;
  for (const ItemType& item : items_) best = std::max(best, item.demand);
  return best;
}

int Instance::cycle_demand(int i) const {
  return (items_[i].demand + saw_capacity_ - 1) / saw_capacity_;
}

Instance Instance::with_saw_capacity(int p) const {
  if (p < 1) throw Error(ErrorKind::kInvalidInput, "saw capacity must be at least 1");
  Instance copy = *this;
  copy.saw_capacity_ = p;
  return copy;
}

Instance Instance::with_id(std::string id) const {
  Instance copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

}  // namespace bocsp
