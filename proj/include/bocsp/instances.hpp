#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "bocsp/instance.hpp"

namespace bocsp {

// SplitMix64 (Steele, Lea, Flood 2014):
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
// The generators below only use the derived draws defined here, so an
// instance is a pure function of its parameters and seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // (next() >> 11) * 2^-53, in [0, 1).
  double uniform01();
  // ((next() >> 11) + 1) * 2^-53, in (0, 1].
  double uniform_open_closed();
  // lo + (hi - lo) * uniform01().
  double uniform_real(double lo, double hi);
  // lo + next() % (hi - lo + 1).
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Saw capacity given either as a number or as "dmax" (the largest demand
// after duplicate items are merged).
struct CapacitySpec {
  bool use_max_demand = false;
  int value = 7;

  static CapacitySpec parse(const std::string& text);
  std::string to_string() const;
};

enum class ItemClass { kS, kM, kG };

ItemClass parse_item_class(const std::string& text);
const char* to_string(ItemClass item_class);
// (v1, v2): item lengths are drawn from [v1*L, v2*L].
std::pair<double, double> class_range(ItemClass item_class);

struct Gen1DParams {
  int m = 10;
  int object_length = 10000;
  ItemClass item_class = ItemClass::kS;
  double mean_demand = 100.0;
  CapacitySpec capacity;
  std::uint64_t seed = 1;

  void validate() const;
};

// Draw order: m lengths, then m demand fractions r_i in (0,1].
// l_i = clamp(round(uniform_real(v1*L, v2*L)), 1, L)
// d_i = max(1, round(m * mean_demand * r_i / sum r))
Instance generate_1d(const Gen1DParams& params);

struct Gen2DParams {
  int m = 20;
  int shape = 1;  // 1, 3, 6, 11 or 14
  CapacitySpec capacity;
  bool allow_rotation = true;
  std::uint64_t seed = 1;

  void validate() const;
};

// Shape classes over items with 25 <= l, w <= 100 (aspect = l / w):
//   1  small square:   0.8 <= aspect <= 1.25 and l*w <= 3750
//   11 medium square:  0.8 <= aspect <= 1.25 and 3750 < l*w < 6875
//   6  large square:   0.8 <= aspect <= 1.25 and l*w >= 6875
//   3  medium, narrow: 50 <= l <= 75 and 25 <= w <= 40
//   14 long, narrow:   aspect >= 2
bool shape_accepts(int shape, int length, int width);

// Object: L, W uniform in [100, 200], swapped so that L >= W. Items: l then
// w uniform in [25, 100] redrawn until the shape predicate holds (throws
// generation-failure after 1e5 draws for one item), then d uniform in
// [10, 200].
Instance generate_2d(const Gen2DParams& params);

// The first m item types of an instance (demands unchanged).
Instance item_subset(const Instance& instance, int m);

// Text format. 1D: header "m L p", then m lines "l d". 2D: header
// "m L W p R" (R = 1 when rotation is allowed), then m lines "l w d".
// Blank lines and lines starting with '#' are ignored.
Instance parse_instance(const std::string& text, const std::string& id);
std::string format_instance(const Instance& instance);

// The instance id is the file name without its extension.
Instance read_instance(const std::string& path);
void write_instance(const Instance& instance, const std::string& path);

}  // namespace bocsp
