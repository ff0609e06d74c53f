#include "stab/error.hpp"

namespace stab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonIrreducibleModulus: return "NonIrreducibleModulus";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DivisionByZeroOperator: return "DivisionByZeroOperator";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ZeroGPrime: return "ZeroGPrime";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotStableInput: return "NotStableInput";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::NoCertificateWithinLimits: return "NoCertificateWithinLimits";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NormalizationReject: return "NormalizationReject";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace stab
