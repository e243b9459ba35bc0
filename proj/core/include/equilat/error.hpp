#pragma once

#include <stdexcept>
#include <string>

namespace equilat {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed TSF text. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The gluing data does not describe a valid surface (bad involution, dart out of range).
class InvalidSurface : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its domain (closed surface required,
// connected surface required, k < 2, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold for every legal input was violated.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace equilat
