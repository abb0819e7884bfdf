#pragma once

#include <stdexcept>
#include <string>

namespace rotlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: invalid group parameters, non-divisible conductors, unknown symbols.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Word text that does not match the grammar. `column` is 1-based.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : UsageError(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A word handed to a certifier does not satisfy the stated side conditions.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for a classification case it does not cover.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

/// Rewriting and the matrix oracle disagreed, or a certified fact failed.
/// Never expected; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotlab
