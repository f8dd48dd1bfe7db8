#pragma once

#include <stdexcept>
#include <string>

namespace whirl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live on groups/algebras of different dimension.
class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Constructor input violates a type invariant (non-skew, non-orthogonal, ...).
class InvalidValue : public Error {
public:
  explicit InvalidValue(const std::string& what) : Error(what) {}
};

/// The Sylvester system UM + MU = w has no stable solution (U not SPD).
class SylvesterSolveFailed : public Error {
public:
  explicit SylvesterSolveFailed(const std::string& what) : Error(what) {}
};

/// An integration step exceeded its drift budget.
class StepRejected : public Error {
public:
  explicit StepRejected(const std::string& what) : Error(what) {}
};

/// A control signal was queried outside its time horizon.
class HorizonExceeded : public Error {
public:
  explicit HorizonExceeded(const std::string& what) : Error(what) {}
};

/// The Chaplygin mass matrix lost invertibility.
class SingularMassMatrix : public Error {
public:
  explicit SingularMassMatrix(const std::string& what) : Error(what) {}
};

/// An experiment configuration failed validation; the message names the field.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace whirl
