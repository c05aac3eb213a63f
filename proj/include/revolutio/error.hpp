#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace revolutio {

enum class ErrorCode {
  kTowerMismatch,
  kZeroDivisor,
  kInvalidInput,
  kNotDivisible,
  kNoRealEmbedding,
  kNotSurfaceOfRevolution,
  kNotAGraph,
  kDegenerateProfile,
  kNotPolynomialCurve,
  kNotEquivalent,
  kNotPolynomial,
  kEmptyRealLocus,
  kInconsistentRoot,
  kUnsupported,
  kIndeterminate,
  kSyntaxError,
  kInternal,
};

// Stable machine-readable name, e.g. "NOT_SOR", "CYLINDER".
std::string_view error_code_name(ErrorCode code);

// Process exit status for a failure: 2 user input, 3 mathematical refusal,
// 4 internal invariant violation.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace revolutio
