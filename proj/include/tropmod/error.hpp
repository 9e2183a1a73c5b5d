#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropmod {

enum class ErrorCode {
  DivisionByZeroElement,
  LengthMismatch,
  NotInteriorVector,
  NegativePowerOfBottom,
  NotHomogeneous,
  NotInModule,
  NotInteriorGenerators,
  NotLatticePreserving,
  BottomBase,
  NotInjective,
  SizeMismatch,
  OrderTooLarge,
  HypothesisViolated,
  InternalVerificationFailed,
  DimensionMismatch,
  NotFinitePoints,
  NotPolytrope,
  PointOffGraph,
  BottomFunction,
  NotASection,
  PreconditionFailed,
  EmptyPolynomial,
  DegenerateCurve,
  DuplicateExponent,
  InvalidArgument,
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

}  // namespace tropmod
