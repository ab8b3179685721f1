#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfimage {

enum class ErrorCode {
  InvalidArgument,
  AmbientMismatch,
  FieldMismatch,
  NotAGroup,
  NotPrimitiveRoot,
  UnknownIndex,
  NotIndependent,
  TruncationOverflow,
  ResourceCap,
  BoundExceeded,
  ParseError,
  AxiomViolation,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the engine; the code drives CLI exit status.
class HopfError : public std::runtime_error {
 public:
  HopfError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopfimage
