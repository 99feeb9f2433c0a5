#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tourney {

/// Raised for out-of-range vertices, repeated vertices, and other bad arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the TRN reader. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                   ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A (vertex count, directionality, c3) combination no tournament can realize.
class UnrealizableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tourney
