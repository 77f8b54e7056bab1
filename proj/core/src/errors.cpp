#include "koszul/errors.hpp"

namespace koszul {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorCode::ClusteringAmbiguity: return "ClusteringAmbiguity";
    case ErrorCode::NotAZero: return "NotAZero";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace koszul
