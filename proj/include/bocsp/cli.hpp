#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bocsp/front.hpp"

namespace bocsp::cli {

// Major.minor; readers accept any minor of the same major.
inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode { kSuccess = 0, kPartial = 1, kUsage = 2 };

// Entry point of the `bocsp` tool: generate | solve | compare.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// A front file as written by `solve` (or `compare` for unions).
struct StoredFront {
  std::string instance;
  std::string method;  // "lec", "fpa", "awt" or "union"
  std::string colgen;  // "static", "dynamic" or "" for unions
  Front front;
  bool aborted = false;
  std::optional<std::pair<long, long>> lex1, lex2;
  long subproblems = 0;
};

// Throws parse-error on malformed JSON or an unsupported major version.
StoredFront parse_front_json(const std::string& text);
StoredFront read_front_file(const std::string& path);

}  // namespace bocsp::cli
