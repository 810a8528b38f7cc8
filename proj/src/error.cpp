#include "bocsp/error.hpp"

namespace bocsp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kNumericFailure: return "numeric-failure";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kInstanceTooLarge: return "instance-too-large-for-exact-pricing";
    case ErrorKind::kGenerationFailure: return "generation-failure";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kIo: return "io-error";
  }
  return "unknown";
}

}  // namespace bocsp
