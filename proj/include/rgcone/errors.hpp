#pragma once

#include <stdexcept>
#include <string>

namespace rgcone {

enum class ErrorCode {
  InvalidArgument,
  InvalidContext,
  ContextMismatch,
  DivisionByZero,
  NotQuadratic,
  SingularMatrix,
  DimensionTooLarge,
  DimensionMismatch,
  PerfectSquare,
  NotSquarefree,
  CapExceeded,
  NotPointed,
  NotSimple,
  ContextDegreeUnsupported,
  BoundTooLarge,
  DependentGenerators,
  NotInCone,
  NoDecomposition,
  NoRationalPoint,
  LogDependence,
  BalanceCapExceeded,
  SaturationCapExceeded,
  IndexTooLarge,
  NotFG,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rgcone
