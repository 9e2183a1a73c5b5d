#include "tropmod/error.hpp"

namespace tropmod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroElement: return "DivisionByZeroElement";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotInteriorVector: return "NotInteriorVector";
    case ErrorCode::NegativePowerOfBottom: return "NegativePowerOfBottom";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotInModule: return "NotInModule";
    case ErrorCode::NotInteriorGenerators: return "NotInteriorGenerators";
    case ErrorCode::NotLatticePreserving: return "NotLatticePreserving";
    case ErrorCode::BottomBase: return "BottomBase";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFinitePoints: return "NotFinitePoints";
    case ErrorCode::NotPolytrope: return "NotPolytrope";
    case ErrorCode::PointOffGraph: return "PointOffGraph";
    case ErrorCode::BottomFunction: return "BottomFunction";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::DuplicateExponent: return "DuplicateExponent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tropmod
