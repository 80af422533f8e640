#include "mwext/error.hpp"

namespace mwext {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::ZeroSpace: return "ZeroSpace";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::RingTooLarge: return "RingTooLarge";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::NotRelated: return "NotRelated";
    case ErrorCode::PointsRelated: return "PointsRelated";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

}  // namespace mwext
