#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sloane {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input whose overall shape is wrong (e.g. non-contiguous indices).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Interval evaluation could not separate the two sides of an inequality
/// even at the maximum working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Root bracket without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace sloane
