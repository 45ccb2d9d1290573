#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace f5gb {

/// Contract violation on algebraic objects: mismatched rings, zero input where a
/// nonzero polynomial is required, and similar misuse.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

/// The signature machinery is only defined for homogeneous generators.
class NonHomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace f5gb
