#pragma once

#include <stdexcept>
#include <string>

namespace psb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vectors or order rows of mismatched length, or a malformed order.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Leading data requested from the zero polynomial.
class UndefinedLeadError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text; `position` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input rejected before any computation (empty generator set, bad point).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or product cap was exceeded.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// An algorithm precondition or internal consistency check failed.
class EngineError : public Error {
 public:
  using Error::Error;
};

}  // namespace psb
