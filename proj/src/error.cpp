#include "schneider/error.hpp"

namespace schneider {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SourceExhausted: return "SourceExhausted";
    case ErrorKind::OrbitNotTerminated: return "OrbitNotTerminated";
    case ErrorKind::NotDyadic: return "NotDyadic";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace schneider
