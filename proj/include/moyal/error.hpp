#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moyal {

enum class ErrorKind {
  DivisionByZero,
  UnknownPreset,
  InvalidOrdering,
  OrderMismatch,
  NonUnitConstantTerm,
  IndexOutOfRange,
  InsufficientOrder,
  DimMismatch,
  MarginTooLarge,
  UndefinedForUnitCase,
  SyntaxError,
  NegativeExponent,
  DivisionByZeroLiteral,
  NotDivisible,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::MarginTooLarge: return "MarginTooLarge";
    case ErrorKind::UndefinedForUnitCase: return "UndefinedForUnitCase";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::DivisionByZeroLiteral: return "DivisionByZeroLiteral";
    case ErrorKind::NotDivisible: return "NotDivisible";
  }
  return "Unknown";
}

/// Base of every error thrown by the library. `kind()` identifies the failure
/// class so callers can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Error raised while reading textual input; `position()` is a byte offset into it.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace moyal
