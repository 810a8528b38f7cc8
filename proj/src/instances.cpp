#include "bocsp/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "bocsp/error.hpp"

namespace bocsp {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform_open_closed() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

int SplitMix64::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

CapacitySpec CapacitySpec::parse(const std::string& text) {
  CapacitySpec spec;
  if (text == "dmax") {
    spec.use_max_demand = true;
    return spec;
  }
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorKind::kInvalidInput, "capacity must be a positive integer or 'dmax'");
  }
  spec.value = value;
  return spec;
}

std::string CapacitySpec::to_string() const {
  return use_max_demand ? "dmax" : std::to_string(value);
}

ItemClass parse_item_class(const std::string& text) {
  if (text == "S") return ItemClass::kS;
  if (text == "M") return ItemClass::kM;
  if (text == "G") return ItemClass::kG;
  throw Error(ErrorKind::kInvalidInput, "item class must be S, M or G");
}

const char* to_string(ItemClass item_class) {
  switch (item_class) {
    case ItemClass::kS: return "S";
    case ItemClass::kM: return "M";
    case ItemClass::kG: return "G";
  }
  return "?";
}

std::pair<double, double> class_range(ItemClass item_class) {
  switch (item_class) {
    case ItemClass::kS: return {0.01, 0.2};
    case ItemClass::kM: return {0.01, 0.8};
    case ItemClass::kG: return {0.2, 0.8};
  }
  return {0.01, 0.2};
}

void Gen1DParams::validate() const {
  if (m < 1) throw Error(ErrorKind::kInvalidInput, "m must be at least 1");
  if (object_length < 1) throw Error(ErrorKind::kInvalidInput, "object length must be positive");
  if (!(mean_demand > 0.0)) throw Error(ErrorKind::kInvalidInput, "mean demand must be positive");
}

Instance generate_1d(const Gen1DParams& params) {
  params.validate();
  SplitMix64 rng(params.seed);
  const auto [v1, v2] = class_range(params.item_class);
  const int L = params.object_length;
  std::vector<int> lengths;
  for (int i = 0; i < params.m; ++i) {
    const long l = std::lround(rng.uniform_real(v1 * L, v2 * L));
    lengths.push_back(static_cast<int>(std::clamp<long>(l, 1, L)));
  }
  std::vector<double> r;
  double total = 0.0;
  for (int i = 0; i < params.m; ++i) {
    r.push_back(rng.uniform_open_closed());
    total += r.back();
  }
  std::vector<ItemType> items;
  for (int i = 0; i < params.m; ++i) {
    const long d = std::lround(params.m * params.mean_demand * r[i] / total);
    items.push_back({lengths[i], 0, static_cast<int>(std::max<long>(1, d))});
  }
  const std::string id = std::string("1d-") + to_string(params.item_class) + "-m" +
                         std::to_string(params.m) + "-L" + std::to_string(L) + "-c" +
                         params.capacity.to_string() + "-s" + std::to_string(params.seed);
  Instance instance = Instance::one_dimensional(id, L, std::move(items), 1);
  const int p = params.capacity.use_max_demand ? instance.max_demand() : params.capacity.value;
  return instance.with_saw_capacity(p);
}

void Gen2DParams::validate() const {
  if (m < 1) throw Error(ErrorKind::kInvalidInput, "m must be at least 1");
  if (shape != 1 && shape != 3 && shape != 6 && shape != 11 && shape != 14) {
    throw Error(ErrorKind::kInvalidInput, "shape id must be one of 1, 3, 6, 11, 14");
  }
}

bool shape_accepts(int shape, int length, int width) {
  const double aspect = static_cast<double>(length) / width;
  const long area = static_cast<long>(length) * width;
  const bool square = aspect >= 0.8 && aspect <= 1.25;
  switch (shape) {
    case 1: return square && area <= 3750;
    case 11: return square && area > 3750 && area < 6875;
    case 6: return square && area >= 6875;
    case 3: return length >= 50 && length <= 75 && width >= 25 && width <= 40;
    case 14: return aspect >= 2.0;
    default: return false;
  }
}

Instance generate_2d(const Gen2DParams& params) {
  params.validate();
  SplitMix64 rng(params.seed);
  int L = rng.uniform_int(100, 200);
  int W = rng.uniform_int(100, 200);
  if (L < W) std::swap(L, W);
  std::vector<ItemType> items;
  for (int i = 0; i < params.m; ++i) {
    int l = 0, w = 0;
    bool found = false;
    for (int draw = 0; draw < 100000; ++draw) {
      l = rng.uniform_int(25, 100);
      w = rng.uniform_int(25, 100);
      if (shape_accepts(params.shape, l, w)) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kGenerationFailure,
                  "shape " + std::to_string(params.shape) + " starved after 100000 draws");
    }
    items.push_back({l, w, rng.uniform_int(10, 200)});
  }
  const std::string id = "2d-id" + std::to_string(params.shape) + "-m" + std::to_string(params.m) +
                         "-c" + params.capacity.to_string() + "-s" + std::to_string(params.seed);
  Instance instance =
      Instance::two_dimensional(id, L, W, std::move(items), 1, params.allow_rotation);
  const int p = params.capacity.use_max_demand ? instance.max_demand() : params.capacity.value;
  return instance.with_saw_capacity(p);
}

Instance item_subset(const Instance& instance, int m) {
  if (m < 1 || m > instance.item_count()) {
    throw Error(ErrorKind::kInvalidInput, "subset size out of range");
  }
  std::vector<ItemType> items(instance.items().begin(), instance.items().begin() + m);
  const std::string id = instance.id() + "-first" + std::to_string(m);
  if (instance.is_2d()) {
    return Instance::two_dimensional(id, instance.object_length(), instance.object_width(),
                                     std::move(items), instance.saw_capacity(),
                                     instance.allow_rotation());
  }
  return Instance::one_dimensional(id, instance.object_length(), std::move(items),
                                   instance.saw_capacity());
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<long> parse_numbers(const std::string& text, int line) {
  std::istringstream in(text);
  std::vector<long> numbers;
  std::string token;
  while (in >> token) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) parse_fail(line, "number out of range: " + token);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      parse_fail(line, "expected an integer, got '" + token + "'");
    }
    if (value < 0 || value > 1000000000L) parse_fail(line, "value out of range: " + token);
    numbers.push_back(value);
  }
  return numbers;
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& id) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<std::pair<int, std::vector<long>>> lines;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.emplace_back(line_no, parse_numbers(raw, line_no));
  }
  if (lines.empty()) throw Error(ErrorKind::kParseError, "line 1: missing header");
  const auto& [header_line, header] = lines.front();
  const bool two_d = header.size() == 5;
  if (header.size() != 3 && !two_d) {
    parse_fail(header_line, "header must be 'm L p' or 'm L W p R'");
  }
  const long m = header[0];
  if (m < 1) parse_fail(header_line, "item count must be at least 1");
  if (static_cast<long>(lines.size()) - 1 != m) {
    parse_fail(header_line, "header announces " + std::to_string(m) + " items, found " +
                                std::to_string(lines.size() - 1));
  }
  const long L = header[1];
  const long W = two_d ? header[2] : 0;
  const long p = two_d ? header[3] : header[2];
  if (L < 1 || (two_d && W < 1)) parse_fail(header_line, "object dimensions must be positive");
  if (p < 1) parse_fail(header_line, "saw capacity must be at least 1");
  if (two_d && header[4] > 1) parse_fail(header_line, "rotation flag must be 0 or 1");
  const bool rotation = two_d && header[4] == 1;

  std::vector<ItemType> items;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, values] = lines[k];
    if (values.size() != (two_d ? 3u : 2u)) {
      parse_fail(no, two_d ? "item line must be 'l w d'" : "item line must be 'l d'");
    }
    ItemType item;
    item.length = static_cast<int>(values[0]);
    item.width = two_d ? static_cast<int>(values[1]) : 0;
    item.demand = static_cast<int>(values.back());
    if (item.length < 1 || (two_d && item.width < 1)) parse_fail(no, "item dimensions must be positive");
    if (item.demand < 1) parse_fail(no, "demand must be at least 1");
    const bool fits = two_d ? ((item.length <= L && item.width <= W) ||
                               (rotation && item.width <= L && item.length <= W))
                            : item.length <= L;
    if (!fits) parse_fail(no, "item does not fit the object");
    items.push_back(item);
  }
  if (two_d) {
    return Instance::two_dimensional(id, static_cast<int>(L), static_cast<int>(W),
                                     std::move(items), static_cast<int>(p), rotation);
  }
  return Instance::one_dimensional(id, static_cast<int>(L), std::move(items), static_cast<int>(p));
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  if (instance.is_2d()) {
    out << instance.item_count() << ' ' << instance.object_length() << ' '
        << instance.object_width() << ' ' << instance.saw_capacity() << ' '
        << (instance.allow_rotation() ? 1 : 0) << '\n';
    for (const ItemType& item : instance.items()) {
      out << item.length << ' ' << item.width << ' ' << item.demand << '\n';
    }
  } else {
    out << instance.item_count() << ' ' << instance.object_length() << ' '
        << instance.saw_capacity() << '\n';
    for (const ItemType& item : instance.items()) out << item.length << ' ' << item.demand << '\n';
  }
  return out.str();
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open instance file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str(), std::filesystem::path(path).stem().string());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void write_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write instance file " + path);
  out << format_instance(instance);
  if (!out) throw Error(ErrorKind::kIo, "failed writing instance file " + path);
}

}  // namespace bocsp
