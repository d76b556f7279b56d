#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polymap {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition or parameter-domain violation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Cyclotomic operands have different conductors, or a target conductor is
/// not a multiple of the source conductor.
class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A computation hit its Budget. Callers turn this into "skipped-budget".
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal self-check failed (e.g. a generated invariant is not invariant).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polymap
