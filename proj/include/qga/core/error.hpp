#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qga {

enum class ErrorCode {
  MetricMismatch,
  InvalidMetric,
  NotScalar,
  NullElement,
  NotGradeOne,
  NotAPoint,
  ZeroMatrix,
  ZeroVector,
  InvalidMatrix,
  GradeOutOfRange,
  DegeneratePoints,
  NotAQuadric,
  NullVersor,
  NotAVersor,
  NotInSubalgebra,
  HasLinearTerms,
  DimensionMismatch,
  DegenerateImage,
  InvalidArgument,
  InvalidDocument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library surfaces as this exception type; the
// code is what callers (and the CLI error object) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qga
