#ifndef PHTANDEM_ERRORS_HPP
#define PHTANDEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phtandem {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (non-square input, size mismatch, empty matrix).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A computation produced NaN/Inf or an iteration failed to converge numerically.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be stable (all eigenvalue real parts < 0) is not.
class StabilityError : public Error {
 public:
  using Error::Error;
};

/// A matrix is singular to working precision. Carries the offending pivot magnitude.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double pivot_magnitude)
      : Error(what), pivot(pivot_magnitude) {}
  double pivot;
};

/// An argument is outside the operation's domain (e.g. negative time).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iteration did not converge. Carries the last iterate change.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double delta)
      : Error(what), last_delta(delta) {}
  double last_delta;
};

/// Quadrature ran out of subdivision budget. Carries the achieved estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved_error)
      : Error(what), achieved(achieved_error) {}
  double achieved;
};

/// A distribution representation failed validation for its declared class.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A problem file could not be read or parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace phtandem

#endif
