#pragma once

#include <stdexcept>
#include <string>

namespace gcg {

enum class ErrorCode {
  InvalidArgument,
  NotDivisible,
  NotLaurent,
  NotPointed,
  MissingGenerator,
  InconsistentArguments,
  IndexOutOfRange,
  CriterionFails,
  RTooSmall,
  NotInRemoteSupport,
  SymbolicModeUnsupported,
  NotInAlgebra,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace gcg
