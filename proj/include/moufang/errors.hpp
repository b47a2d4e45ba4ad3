#pragma once

#include <stdexcept>
#include <string>

namespace moufang {

enum class ErrorCode {
  NotLatinSquare,
  NoIdentity,
  NotNormal,
  NotASubloop,
  DegreeMismatch,
  UnsupportedFieldSize,
  NotAGroup,
  UnknownName,
  InvalidParameter,
  TableTooLarge,
  ClosureBudgetExceeded,
  CarrierTooLarge,
  TrialityViolated,
  NotTriality,
  RelationsViolated,
  UnknownRow,
  NotSylowPrime,
  RadicalNotTrivial,
  UnrecognizedSimpleFactor,
  IoError,
  InternalError,
};

const char* error_code_name(ErrorCode code);

class MoufangError : public std::runtime_error {
 public:
  MoufangError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw MoufangError(code, message);
}

// Budget for open-ended closures and searches; overridable through the
// MOUFANG_BUDGET environment variable.
std::size_t default_budget();

}  // namespace moufang
