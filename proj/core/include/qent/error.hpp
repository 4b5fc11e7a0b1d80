#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qent {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  NegativeEigenvalue,
  DimensionMismatch,
  ZeroVector,
  IndexOutOfRange,
  ParameterOutOfRange,
  InvalidWeights,
  NotUnitary,
  NotAProbabilityVector,
  RankDeficient,
  BadPartition,
  BadRegister,
  LedgerViolation,
  InvalidDensity,
  ParseError,
  UnknownProtocol,
  FlagError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qent
