#pragma once

#include <stdexcept>
#include <string>

namespace lswg {

/// Bad argument passed by the caller (n = 0, eps <= 0, unknown family, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polygon or mesh topology that cannot be handled (self-intersection,
/// non-manifold edge, clockwise cell).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside a dense or sparse factorization.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Malformed text input. line() is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace lswg
