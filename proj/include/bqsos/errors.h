#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bqsos {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A term that is not of degree (2, 2) in (x, y).
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Variable index outside the declared dimensions, or dimensions outside
/// the supported range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible (m, n).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The form does not have the structure an operation requires
/// (simple, diagonal, y-deficient at a column).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A heuristic search exhausted its budget. This is inconclusive and says
/// nothing about whether a solution exists.
class SearchFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace bqsos
