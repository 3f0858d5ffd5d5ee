#pragma once

#include <stdexcept>
#include <string>

namespace monorel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible ambient spaces.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-monotone input, Z not in dom A, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two mathematically equivalent criteria disagreed numerically.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace monorel
