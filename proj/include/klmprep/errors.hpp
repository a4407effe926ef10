#pragma once

#include <stdexcept>
#include <string>

namespace klm {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Container length outside the supported range (empty input, more than
/// kMaxQubits qubits, mismatched register sizes).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Qubit or amplitude index out of range, or a gate applied to one qubit twice.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its documented domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Requested amplitude split ratio is not reachable at the given gate phase.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// Target amplitude vector is identically zero.
class DegenerateSpecError : public Error {
 public:
  using Error::Error;
};

/// An amplitude ratio with a vanishing denominator was requested.
class UnboundedRatioError : public Error {
 public:
  using Error::Error;
};

/// Equal split of a vanishing last amplitude.
class DegenerateSplitError : public Error {
 public:
  using Error::Error;
};

/// Malformed on-disk input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace klm
