#include "rgcone/errors.hpp"

namespace rgcone {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PerfectSquare: return "PerfectSquare";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::ContextDegreeUnsupported: return "ContextDegreeUnsupported";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NoRationalPoint: return "NoRationalPoint";
    case ErrorCode::LogDependence: return "LogDependence";
    case ErrorCode::BalanceCapExceeded: return "BalanceCapExceeded";
    case ErrorCode::SaturationCapExceeded: return "SaturationCapExceeded";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::NotFG: return "NotFG";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rgcone
