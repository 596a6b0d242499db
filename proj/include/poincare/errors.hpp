#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// A certified query needed simple roots but found a repeated one.
class NotSquareFree : public Error {
 public:
  using Error::Error;
};

/// Interval refinement hit its depth limit; usually means two polynomials
/// share a root the caller assumed to be distinct.
class RefinementBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A Sturm count disagreed with the count guaranteed by the theory.
class CountMismatch : public Error {
 public:
  using Error::Error;
};

class NonInvertibleSeries : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace poincare
