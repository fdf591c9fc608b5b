#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

/// Base of every error raised by the toolkit. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (exit code 2).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A bounded search (admissible primes, primitive roots) ran out (exit code 3).
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// A configured size cap or the 62-bit modulus range was exceeded (exit code 4).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Floating evaluation could not certify an integer result.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

/// A postcondition that holds mathematically failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace abelian
