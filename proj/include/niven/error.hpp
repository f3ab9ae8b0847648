#pragma once

#include <stdexcept>
#include <string>

namespace niven {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value is outside an operation's domain
/// (zero divisor, n = 0, reducible field polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded (iterate degree, factoring cap, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An identity that holds by theory failed at runtime, e.g. a nonzero
/// remainder in a division that must be exact. Always a bug or corrupted data.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace niven
