#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdgb {

/// Malformed user input: bad system file, unknown variable, non-zero-dimensional ideal.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a polynomial expression; carries a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotZeroDimensional : public InputError {
 public:
  using InputError::InputError;
};

/// A violated internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void internal_failure(const char* expr, const char* file, int line, const std::string& msg);

}  // namespace zdgb

#define ZDGB_CHECK(cond, msg)                                            \
  do {                                                                   \
    if (!(cond)) ::zdgb::internal_failure(#cond, __FILE__, __LINE__, msg); \
  } while (0)
