#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zaqlms {

/// Malformed quaternion literal or config value. column is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_{column} {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Binary vector operation on operands of different lengths.
class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("length mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

/// A numerical evaluation produced NaN or Inf where a finite value is required.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive weights blew up. run_index is set by the experiment layer.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::size_t iteration, std::size_t run_index = 0)
      : std::runtime_error(what), iteration_{iteration}, run_index_{run_index} {}
  std::size_t iteration() const noexcept { return iteration_; }
  std::size_t run_index() const noexcept { return run_index_; }

 private:
  std::size_t iteration_;
  std::size_t run_index_;
};

/// Scenario config rejected. line/column are 1-based; 0 when not tied to a
/// source position (e.g. a cross-field invariant).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_{line}, column_{column} {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) {
      return what;
    }
    std::string out = "line " + std::to_string(line);
    if (column != 0) {
      out += ", column " + std::to_string(column);
    }
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace zaqlms

namespace zaqlms {

/// File-system failure; the message carries the OS error text.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zaqlms
