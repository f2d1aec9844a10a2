#pragma once

#include <stdexcept>
#include <string>

namespace klein {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid Dynkin data: unknown series letter, rank outside the series.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// The input matrix is not a valid (positive definite, irreducible) Cartan matrix.
class NotCartanError : public Error {
 public:
  using Error::Error;
};

/// Lattice enumeration rejected its input (non positive definite Gram matrix,
/// negative or odd norm bound).
class EnumerationError : public Error {
 public:
  using Error::Error;
};

/// Mixed-order cyclotomic arithmetic.
class IncompatibleRingError : public Error {
 public:
  using Error::Error;
};

/// A series expected to have rational-integer coefficients does not. Carries
/// the first offending degree; the coefficient itself travels with the
/// demotion result so it can be reported.
class IntegralityViolationError : public Error {
 public:
  IntegralityViolationError(const std::string& what, int degree)
      : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// A configured resource limit (memory, term count) was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (e.g. an odd Cartan norm on an even lattice).
/// Seeing one of these is a bug, not a user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace klein
