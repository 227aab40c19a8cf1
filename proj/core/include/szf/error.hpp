#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace szf {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return what;
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An instance exceeds a fixed size cap (vertex bitset width, search caps).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (wrong sign alphabet, inapplicable move, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search ran past its deadline.
class Timeout : public Error {
 public:
  Timeout() : Error("search deadline exceeded") {}
};

}  // namespace szf
