#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "bocsp/error.hpp"
#include "bocsp/instances.hpp"
#include "doctest.h"

using namespace bocsp;

namespace {

std::string error_message(const std::string& text) {
  try {
    parse_instance(text, "x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParseError);
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("SplitMix64 reference stream") {
  // First outputs for seed 1234567, as published with the algorithm.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
  SplitMix64 a(5), b(5);
  for (int k = 0; k < 100; ++k) {
    const double u = a.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = b.uniform_open_closed();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
  SplitMix64 c(9);
  for (int k = 0; k < 1000; ++k) {
    const int x = c.uniform_int(3, 7);
    CHECK(x >= 3);
    CHECK(x <= 7);
  }
}

TEST_CASE("capacity and class specs") {
  CHECK(CapacitySpec::parse("dmax").use_max_demand);
  CHECK(CapacitySpec::parse("7").value == 7);
  CHECK(CapacitySpec::parse("dmax").to_string() == "dmax");
  CHECK(CapacitySpec::parse("12").to_string() == "12");
  CHECK_THROWS_AS(CapacitySpec::parse("0"), Error);
  CHECK_THROWS_AS(CapacitySpec::parse("7x"), Error);
  CHECK(parse_item_class("G") == ItemClass::kG);
  CHECK_THROWS_AS(parse_item_class("X"), Error);
  CHECK(class_range(ItemClass::kM) == std::make_pair(0.01, 0.8));
}

TEST_CASE("1D generation is deterministic and respects the class range") {
  Gen1DParams params;
  params.seed = 1;
  CHECK(format_instance(generate_1d(params)) == format_instance(generate_1d(params)));
  CHECK(generate_1d(params).id() == "1d-S-m10-L10000-c7-s1");
  params.seed = 2;
  CHECK(format_instance(generate_1d(params)) != format_instance(generate_1d(Gen1DParams{})));

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    for (ItemClass item_class : {ItemClass::kS, ItemClass::kM, ItemClass::kG}) {
      Gen1DParams p;
      p.m = 40;
      p.item_class = item_class;
      p.seed = seed;
      const Instance inst = generate_1d(p);
      const auto [v1, v2] = class_range(item_class);
      CHECK(inst.item_count() <= 40);
      CHECK(inst.saw_capacity() == 7);
      for (const ItemType& item : inst.items()) {
        CHECK(item.length >= std::max(1.0, std::floor(v1 * p.object_length)));
        CHECK(item.length <= v2 * p.object_length);
        CHECK(item.demand >= 1);
      }
    }
  }
}

TEST_CASE("dmax capacity resolves to the largest merged demand") {
  Gen1DParams params;
  params.capacity = CapacitySpec::parse("dmax");
  params.m = 20;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    params.seed = seed;
    const Instance inst = generate_1d(params);
    CHECK(inst.saw_capacity() == inst.max_demand());
  }
  Gen2DParams params2;
  params2.capacity = CapacitySpec::parse("dmax");
  const Instance inst2 = generate_2d(params2);
  CHECK(inst2.saw_capacity() == inst2.max_demand());
}

TEST_CASE("class S mean item length is near the middle of its range") {
  double total = 0.0;
  long count = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Gen1DParams params;
    params.m = 100;
    params.seed = seed;
    const Instance inst = generate_1d(params);
    for (const ItemType& item : inst.items()) {
      total += item.length;
      ++count;
    }
  }
  const double expected = 10000 * (0.01 + 0.2) / 2;
  CHECK(std::abs(total / count - expected) <= 0.1 * expected);
}

TEST_CASE("2D generation follows the object ranges and shape predicates") {
  for (int shape : {1, 3, 6, 11, 14}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Gen2DParams params;
      params.shape = shape;
      params.seed = seed;
      const Instance inst = generate_2d(params);
      CAPTURE(shape);
      CHECK(inst.is_2d());
      CHECK(inst.allow_rotation());
      CHECK(inst.object_length() >= inst.object_width());
      CHECK(inst.object_width() >= 100);
      CHECK(inst.object_length() <= 200);
      for (const ItemType& item : inst.items()) {
        CHECK(shape_accepts(shape, item.length, item.width));
        CHECK(item.demand >= 10);
        CHECK(item.length <= inst.object_length());
        CHECK(item.width <= inst.object_length());
      }
      CHECK(format_instance(inst) == format_instance(generate_2d(params)));
    }
  }
  Gen2DParams bad;
  bad.shape = 2;
  CHECK_THROWS_AS(generate_2d(bad), Error);
  CHECK(generate_2d(Gen2DParams{}).id() == "2d-id1-m20-c7-s1");
}

TEST_CASE("shape predicates") {
  CHECK(shape_accepts(1, 50, 50));
  CHECK_FALSE(shape_accepts(1, 70, 70));
  CHECK(shape_accepts(11, 70, 70));
  CHECK(shape_accepts(6, 90, 90));
  CHECK_FALSE(shape_accepts(6, 100, 50));
  CHECK(shape_accepts(3, 60, 30));
  CHECK_FALSE(shape_accepts(3, 80, 30));
  CHECK(shape_accepts(14, 100, 50));
  CHECK_FALSE(shape_accepts(14, 99, 50));
  CHECK_FALSE(shape_accepts(7, 50, 50));
}

TEST_CASE("item subsets keep the first items") {
  Gen1DParams params;
  params.m = 40;
  const Instance inst = generate_1d(params);
  const Instance sub = item_subset(inst, 10);
  REQUIRE(sub.item_count() == 10);
  for (int i = 0; i < 10; ++i) CHECK(sub.item(i) == inst.item(i));
  CHECK(sub.id() == inst.id() + "-first10");
  CHECK_THROWS_AS(item_subset(inst, 0), Error);
  CHECK_THROWS_AS(item_subset(inst, inst.item_count() + 1), Error);
}

TEST_CASE("parsing the text format") {
  const Instance tiny = parse_instance("2 10 2\n3 4\n5 2\n", "tiny");
  CHECK(tiny == Instance::one_dimensional("tiny", 10, {{3, 0, 4}, {5, 0, 2}}, 2));
  const Instance commented = parse_instance("# Tiny\n\n2 10 2\n  # item lines\n3 4\n\n5 2", "tiny");
  CHECK(commented == tiny);
  const Instance two = parse_instance("1 10 6 1 1\n5 8 3\n", "r");
  CHECK(two.is_2d());
  CHECK(two.allow_rotation());
  CHECK(two.item(0).width == 8);
}

TEST_CASE("parse errors name the offending line") {
  CHECK(starts_with(error_message("2 10 2\n3 4\n11 2\n"), "line 3:"));
  CHECK(starts_with(error_message("# c\n2 10 2\n3 4\n"), "line 2:"));
  CHECK(starts_with(error_message("2 10\n3 4\n5 2\n"), "line 1:"));
  CHECK(starts_with(error_message("2 10 2\n3 x\n5 2\n"), "line 2:"));
  CHECK(starts_with(error_message("2 10 2\n3 4 1\n5 2\n"), "line 2:"));
  CHECK(starts_with(error_message("2 10 2\n3 0\n5 2\n"), "line 2:"));
  CHECK(starts_with(error_message("1 10 6 1 0\n5 8 3\n"), "line 2:"));
  CHECK(starts_with(error_message("1 99999999999999999999 1\n5 1\n"), "line 1:"));
  CHECK(starts_with(error_message(""), "line 1:"));
}

TEST_CASE("files round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "bocsp-test-instances";
  std::filesystem::create_directories(dir);
  Gen1DParams p1;
  p1.m = 30;
  p1.item_class = ItemClass::kM;
  Gen2DParams p2;
  p2.shape = 14;
  for (const Instance& inst : {generate_1d(p1), generate_2d(p2)}) {
    const std::string path = (dir / (inst.id() + ".txt")).string();
    write_instance(inst, path);
    CHECK(read_instance(path) == inst);
  }
  try {
    read_instance((dir / "missing.txt").string());
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
    CHECK(std::string(e.what()).find("missing.txt") != std::string::npos);
  }
  const std::string bad = (dir / "bad.txt").string();
  std::ofstream(bad) << "1 10 1\n20 1\n";
  try {
    read_instance(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParseError);
    CHECK(std::string(e.what()).find("line 2:") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
