#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Series inversion needs a unit constant term.
class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

// Composition needs an inner series with zero constant term.
class NonzeroInnerConstant : public Error {
 public:
  using Error::Error;
};

class ZeroLambda : public Error {
 public:
  ZeroLambda() : Error("lambda must be nonzero for the Euler-expansion route") {}
};

class DenominatorNotUnit : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace umbral
