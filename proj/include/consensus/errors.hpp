#pragma once

#include <stdexcept>
#include <string>

namespace consensus {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument values (bad indices, empty input, out-of-range parameters).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Objects defined over different numbers of alternatives were mixed.
class DimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A request exceeds a configured size cap (enumeration, table construction).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& message) : Error(message), line_(0) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Input is syntactically recognizable but uses an unsupported feature
/// (ties, partial orders).
class UnsupportedFormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace consensus
