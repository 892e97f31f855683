#ifndef POPMAX_ERRORS_HPP_
#define POPMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace popmax {

// Malformed or invalid user input. The CLI maps this family to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error with a 1-based source location.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed text that violates an instance or formula invariant.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// An operation was called on arguments outside its domain, e.g. verifying
// popularity of a matching that is not maximum.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Exhaustive routines refuse inputs above their configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee that should hold by construction was violated. Never a user
// error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace popmax

#endif  // POPMAX_ERRORS_HPP_
