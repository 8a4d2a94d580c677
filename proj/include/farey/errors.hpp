#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input: bad fractions, unknown vertices,
// loops, label conflicts, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

// Contracting a vertex set that is empty or not connected.
class ContractionError : public InputError {
 public:
  using InputError::InputError;
};

// Textual input that failed to parse; carries the position of the failure.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A path supply could not honour a request: too few paths, exhausted stock,
// or a finite prefix too short for the requested restriction.
class SupplyError : public Error {
 public:
  using Error::Error;
};

// The extracted prefix cannot be aligned with the required separator.
class GrainingError : public SupplyError {
 public:
  using SupplyError::SupplyError;
};

// A guard against inputs beyond the sizes this library is tuned for.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace farey
