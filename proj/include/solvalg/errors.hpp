#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace solvalg {

/// Base class of every error raised by the kernel.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on the number of generators.
class DimensionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Scalars from two different ground fields were combined.
class FieldMismatchError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Leading monomial or degree of the zero polynomial was requested.
class ZeroPolynomialError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InvalidDegreeFunctionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InvalidOrderingError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InvalidPresentationError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A transform was requested for a presentation that is not filtered.
class NotFilteredError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// homogenize_to_level was asked for a level below d(f).
class LevelTooLowError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Integer overflow in exponent or degree arithmetic.
class OverflowError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// The rewriting engine used more steps than it was allowed.
class BudgetExceededError : public AlgebraError {
 public:
  explicit BudgetExceededError(std::uint64_t budget)
      : AlgebraError("rewrite step budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Syntax or semantic error in an algebra file or expression, with a
/// 1-based source position.
class ParseError : public AlgebraError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : AlgebraError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace solvalg
