#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stab {

enum class ErrorCode {
  ZeroPolynomial,
  NonIrreducibleModulus,
  KindMismatch,
  DivisionByZero,
  DivisionByZeroOperator,
  WindowTooShort,
  PreconditionViolated,
  ZeroGPrime,
  Unsupported,
  NotStableInput,
  InsufficientTruncation,
  NoCertificateWithinLimits,
  ZeroOperator,
  InvalidBounds,
  SyntaxError,
  NormalizationReject,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stab
