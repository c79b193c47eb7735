#pragma once

#include <stdexcept>
#include <string>

namespace banproj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-finite coordinates, p <= 1, negative tolerances, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)) {}
};

/// A linear form or objective has no minimizer on an unbounded set.
class Unbounded : public Error {
 public:
  using Error::Error;
};

/// Vertex enumeration requested for a ray or a line.
class NotPolyhedral : public Error {
 public:
  using Error::Error;
};

/// A point that must lie in a convex set does not.
class NotInSet : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnknownScenario : public Error {
 public:
  using Error::Error;
};

}  // namespace banproj
