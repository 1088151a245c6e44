#pragma once

#include <stdexcept>
#include <string>

namespace bridgeworks {

/// Malformed or out-of-contract input. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The rational backend was asked for a length that is not rational.
class InexactLength : public InputError {
 public:
  using InputError::InputError;
};

/// A parse failure with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bridgeworks
