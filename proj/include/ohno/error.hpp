#pragma once

#include <stdexcept>
#include <string>

namespace ohno {

/// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside an operation's domain: a non-admissible index
/// where an admissible one is required, a depth mismatch, a parameter out
/// of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The evaluator cannot reach the requested tolerance within its limits
/// (series cap exhausted, tolerance finer than the supported floor).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration, grid or report request.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ohno
