#pragma once

#include <stdexcept>
#include <string>

namespace incidence {

/// Root of the library's exception hierarchy. Each subclass maps onto one
/// CLI exit code (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file syntax, dimension mismatch, unknown kind.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation needs a curve representation the curve does not carry
/// (for example a crossing computation on an implicit-only curve).
class UnsupportedRepresentation : public InputError {
 public:
  using InputError::InputError;
};

/// Raised when a restriction vanishes identically: the curve lies inside
/// the zero set, or two curves share a component.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class CommonComponent : public Error {
 public:
  using Error::Error;
};

class PartitionFailure : public Error {
 public:
  using Error::Error;
};

class GenericityFailure : public Error {
 public:
  using Error::Error;
};

class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class FitUndefined : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace incidence
