#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace koszul {

enum class ErrorCode {
  BackendMismatch,
  NotContained,
  SyntaxError,
  UnknownVariable,
  NotZeroDimensional,
  NotCommuting,
  IrrationalSpectrum,
  ClusteringAmbiguity,
  NotAZero,
  NotIsolated,
  ArityMismatch,
  ZeroOnBoundary,
  NotNilpotent,
  DimensionMismatch,
  DivisionByZero,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::SyntaxError, message + " at line " + std::to_string(line) +
                                          ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace koszul
