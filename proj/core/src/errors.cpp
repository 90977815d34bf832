#include "mckay/errors.hpp"

namespace mckay {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PromotionOverflow: return "PromotionOverflow";
    case ErrorKind::NonIntegerAge: return "NonIntegerAge";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::WeightSumMismatch: return "WeightSumMismatch";
    case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotSL: return "NotSL";
    case ErrorKind::CoverageGap: return "CoverageGap";
    case ErrorKind::CoverageOverlap: return "CoverageOverlap";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::Internal: return "InternalAssertion";
  }
  return "Unknown";
}

int Error::exit_code() const noexcept {
  switch (kind_) {
    case ErrorKind::NotSL:
    case ErrorKind::NotIsolated:
      return 1;
    case ErrorKind::Parse:
    case ErrorKind::UnknownBuiltin:
    case ErrorKind::UnsupportedFormat:
      return 2;
    case ErrorKind::CapExceeded:
    case ErrorKind::PromotionOverflow:
      return 4;
    default:
      return 3;
  }
}

}  // namespace mckay
