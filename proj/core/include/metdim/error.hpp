#pragma once

#include <stdexcept>
#include <string>

namespace metdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates the documented precondition of an operation
/// (k > n, a construction hypothesis, an unsupported design order, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two subsets (or a subset and an instance) live over different ground sets.
class GroundSetMismatch : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds a configured vertex budget (BFS oracle, verifier,
/// exact solver).
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace metdim
