#pragma once

#include <stdexcept>
#include <string>

namespace negsq {

// Bad input: malformed data, wrong dimensions, unsupported parameters.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The inputs are well-formed but mathematically impossible, or an internal
// invariant broke.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidPrimePower : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedEvenPower : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class KappaOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisibilityViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonIntegerSignature : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

class InvariantViolation : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

}  // namespace negsq
