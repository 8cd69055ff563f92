#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefper {

enum class ErrorCode {
  DomainViolation,
  EmptyDims,
  NonIncreasingDims,
  NonPositiveDim,
  LengthMismatch,
  KOutOfRange,
  RepeatedOrEvenDim,
  InvalidPreset,
  NotQuasiUnipotent,
  HorizonTooLarge,
  ZeroEigenvalue,
  NotExpressible,
  InvariantViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::EmptyDims: return "EmptyDims";
    case ErrorCode::NonIncreasingDims: return "NonIncreasingDims";
    case ErrorCode::NonPositiveDim: return "NonPositiveDim";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::RepeatedOrEvenDim: return "RepeatedOrEvenDim";
    case ErrorCode::InvalidPreset: return "InvalidPreset";
    case ErrorCode::NotQuasiUnipotent: return "NotQuasiUnipotent";
    case ErrorCode::HorizonTooLarge: return "HorizonTooLarge";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::NotExpressible: return "NotExpressible";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lefper
