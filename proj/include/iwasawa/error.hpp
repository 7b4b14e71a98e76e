#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwasawa {

// Error categories surfaced by the library. The names returned by
// error_name() are part of the CLI contract and must not change.
enum class ErrorCode {
  NonPrime,
  IndexOutOfRange,
  DimensionMismatch,
  SingularMatrix,
  ZeroPivot,
  NotSpecialLinear,
  InvalidFamilyParams,
  PrecisionLoss,
  ZeroVector,
  ParseError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::NotSpecialLinear: return "NotSpecialLinear";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iwasawa
