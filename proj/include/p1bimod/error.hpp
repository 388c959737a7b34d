#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace p1bimod {

enum class ErrorCode {
  NotContained,
  SingularPencil,
  SplitFailure,
  NoStabilization,
  EqualPoints,
  WindowMismatch,
  WindowTooSmall,
  NotAdmissible,
  FieldExhausted,
  IsoNotFound,
  Disagreement,
  Format,
  Io,
};

std::string_view error_name(ErrorCode code);

/// Every recoverable failure in the engine is reported through this type;
/// `code()` is stable and is what the command-line front end maps to exit
/// codes.
class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace p1bimod
