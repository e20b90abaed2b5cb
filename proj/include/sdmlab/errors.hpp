#pragma once

// Exception hierarchy. Everything thrown by the library derives from
// sdmlab::Error so callers can catch a single type at the boundary.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdmlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- bit vectors / memory ---------------------------------------------------

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class TooManyHardLocations : public Error {
 public:
  using Error::Error;
};

class DuplicateAddress : public Error {
 public:
  using Error::Error;
};

class InsufficientItems : public Error {
 public:
  using Error::Error;
};

class RadiusUnresolved : public Error {
 public:
  using Error::Error;
};

// Read found no hard location within the access radius. Usually means the
// radius is too small for the hard-location density.
class EmptyAccessSphere : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// --- datasets ---------------------------------------------------------------

// Parse failure with 1-based file coordinates (0 = not applicable).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class BadHeader : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonBinaryValue : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateLanguage : public ParseError {
 public:
  using ParseError::ParseError;
};

class RowLengthMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyDataset : public Error {
 public:
  using Error::Error;
};

// --- statistics / reports ---------------------------------------------------

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Result file does not match the schema this tool version understands.
class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace sdmlab
