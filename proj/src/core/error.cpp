#include "qga/core/error.hpp"

namespace qga {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MetricMismatch: return "MetricMismatch";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::NullElement: return "NullElement";
    case ErrorCode::NotGradeOne: return "NotGradeOne";
    case ErrorCode::NotAPoint: return "NotAPoint";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::NotAQuadric: return "NotAQuadric";
    case ErrorCode::NullVersor: return "NullVersor";
    case ErrorCode::NotAVersor: return "NotAVersor";
    case ErrorCode::NotInSubalgebra: return "NotInSubalgebra";
    case ErrorCode::HasLinearTerms: return "HasLinearTerms";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateImage: return "DegenerateImage";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

}  // namespace qga
