#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steenrod {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (mixed degrees, l > s, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (t, s, degree) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `position` is a 0-based character offset within an
/// expression, or a 1-based line number within a file (0 for the whole file).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position) : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A structurally invalid module description or action table.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Should never fire: an internal invariant of the algebra failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace steenrod
