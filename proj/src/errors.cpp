#include "moufang/errors.hpp"

#include <cstdlib>

namespace moufang {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotASubloop: return "NotASubloop";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::TrialityViolated: return "TrialityViolated";
    case ErrorCode::NotTriality: return "NotTriality";
    case ErrorCode::RelationsViolated: return "RelationsViolated";
    case ErrorCode::UnknownRow: return "UnknownRow";
    case ErrorCode::NotSylowPrime: return "NotSylowPrime";
    case ErrorCode::RadicalNotTrivial: return "RadicalNotTrivial";
    case ErrorCode::UnrecognizedSimpleFactor: return "UnrecognizedSimpleFactor";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

std::size_t default_budget() {
  static const std::size_t value = [] {
    if (const char* env = std::getenv("MOUFANG_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && parsed > 0) return static_cast<std::size_t>(parsed);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return value;
}

}  // namespace moufang
