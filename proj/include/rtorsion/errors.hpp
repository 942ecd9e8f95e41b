#pragma once

#include <stdexcept>
#include <string>

namespace rtorsion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: parse failures, bad dimensions,
/// relators violated by φ or α. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Input that is well formed but outside what the engines handle
/// (e.g. presentations of deficiency other than one). Exit code 3.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity the library relies on failed at runtime. Exit code 4.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rtorsion
