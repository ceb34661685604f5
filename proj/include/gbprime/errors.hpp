#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbprime {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// decode() was given an integer with a prime factor outside the context.
class ForeignPrimeFactorError : public Error {
public:
  using Error::Error;
};

/// A leading term was requested from the zero polynomial.
class ZeroPolynomialError : public Error {
public:
  using Error::Error;
};

/// Term or monomial quotient requested where the divisor does not divide.
class NotDivisibleError : public Error {
public:
  using Error::Error;
};

/// A value was used with a context of a different variable count.
class ArityMismatchError : public Error {
public:
  using Error::Error;
};

/// Brute-force enumeration refused: too many variables.
class TooManyVariablesError : public Error {
public:
  using Error::Error;
};

/// The Buchberger loop hit the configured pass ceiling before its fixed point.
class PassLimitExceededError : public Error {
public:
  using Error::Error;
};

/// Division hit the optional step ceiling.
class StepLimitExceededError : public Error {
public:
  using Error::Error;
};

/// reduce_basis() was given an empty or all-zero basis.
class EmptyBasisError : public Error {
public:
  using Error::Error;
};

/// Text could not be parsed; carries the character offset of the problem.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_ = 0;
};

/// A variable index at or beyond the context's variable count.
class UndefinedVariableError : public ParseError {
public:
  using ParseError::ParseError;
};

/// A negative exponent after '^'.
class NegativeExponentError : public ParseError {
public:
  using ParseError::ParseError;
};

}  // namespace gbprime
