#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwext {

enum class ErrorCode {
  NonPrime,
  ReduciblePolynomial,
  OrderTooLarge,
  DivisionByZero,
  FieldMismatch,
  SpaceMismatch,
  ZeroColumn,
  ZeroSpace,
  WidthMismatch,
  UnknownPoint,
  EnumerationTooLarge,
  RingTooLarge,
  SearchTooLarge,
  NotRelated,
  PointsRelated,
  NotSaturated,
  ZeroFunctional,
  LengthMismatch,
  NotMonomial,
  TheoremViolation,
  PreconditionFailed,
  InvalidArgument,
  ParseError,
  SchemaViolation,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries a code; `field` names the
// offending input field when one is known (used by the JSON loaders).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace mwext
