#pragma once

#include <stdexcept>

namespace dyadic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Rational whose reduced denominator is not a power of two.
class NonDyadicError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// tan at a quarter turn, cot at zero.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Signature word whose seed bits disagree with the seed it is decoded with.
class InconsistentSeedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Value does not fit the 64-bit word model (denominator exponent > 62,
/// numerator overflow).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

}  // namespace dyadic
