#pragma once

#include <stdexcept>
#include <string>

namespace mie {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical or physical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unit-system mismatch or undefined conversion.
class UnitError : public Error {
 public:
  using Error::Error;
};

/// Result exceeds the representable range of double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Numerical integration did not reach the requested accuracy.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// An oracle eigenstate is not bound on the chosen radial domain.
class BoundaryContaminationError : public Error {
 public:
  BoundaryContaminationError(const std::string& what, int state_index)
      : Error(what), state_index_(state_index) {}
  int state_index() const noexcept { return state_index_; }

 private:
  int state_index_;
};

/// Malformed registry file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Registry entry violating a MoleculeSpec invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace mie
