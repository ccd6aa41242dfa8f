#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtp {

/// Failure categories shared by every module. The CLI reports these codes
/// verbatim in its `{code, message}` error objects.
enum class ErrorCode {
  DimensionMismatch,
  ShapeMismatch,
  OrderMismatch,
  ResultTooLarge,
  NegativeBaseFractionalExponent,
  InexactExponent,
  DivisionByZero,
  InvalidPermutation,
  SingularDiagonal,
  NotUnitNorm,
  NotOrthogonal,
  NonPositiveVector,
  NegativeEntry,
  ZeroVector,
  EigenpairResidualTooLarge,
  DegenerateForm,
  UnsupportedDimension,
  UnsupportedOrder,
  RootRefinementFailed,
  UniformityMismatch,
  InvalidHypergraph,
  NotIrreducible,
  NotConverged,
  FamilyExplosion,
  CensusTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gtp
