#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. position() is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A polynomial lies outside the truncated space a functional is determined on.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A functional does not annul the truncated ideal piece it is required to annul.
class NotAnnihilating : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace brf
