#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coil {

enum class ErrorKind {
  ZeroOverZero,
  NonHyperbolicSlope,
  Overflow,
  OracleCapExceeded,
  UnsupportedTwistCurve,
  SyntaxError,
  NonQuadrivalent,
  EdgePairingError,
  NonPlanarRotation,
  NotAKnot,
  NotACrossingCircle,
  PreconditionViolation,
  SlopeTooShort,
  NoHyperbolicityCertificate,
  VolumeBelowFloor,
  NoCertifiedRows,
  EmptyRange,
  ConfigError,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Domain failure. The CLI maps these to exit status 1 and prints name().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace coil
