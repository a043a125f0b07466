#pragma once

#include <stdexcept>
#include <string>

namespace mutunc {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes, subsystem indices or dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input violates a domain invariant (hermiticity, positivity, ranges, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An iterative solver failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mutunc
