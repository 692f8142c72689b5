#pragma once

#include <stdexcept>
#include <string>

namespace tropohull {

// Bad input: mismatched dimensions, malformed files, out-of-domain values.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A value outside the domain of an operation (degree of zero, pole, ...).
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// An internal consistency check failed (e.g. a boundary map with d^2 != 0).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded search ran out of budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropohull
