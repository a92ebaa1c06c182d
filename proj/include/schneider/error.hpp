#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schneider {

enum class ErrorKind {
  InvalidPrime,
  NotIntegral,
  PrecisionTooLow,
  PrecisionExhausted,
  DivisionByZero,
  EmptyInput,
  SourceExhausted,
  OrbitNotTerminated,
  NotDyadic,
  InvariantViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind is stable and is
/// what the command-line front end reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schneider
