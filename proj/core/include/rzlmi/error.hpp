#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rzlmi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Numerical construction did not reach the requested tolerance.
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace rzlmi
