#pragma once

#include <stdexcept>
#include <string>

namespace bocsp {

enum class ErrorKind {
  kInvalidInput,
  kNumericFailure,
  kParseError,
  kInstanceTooLarge,
  kGenerationFailure,
  kInfeasible,
  kIo,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bocsp
