#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input lies at a point where the requested quantity is undefined
/// (e.g. theta at k=0 with B=0).
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

/// The requested quantity diverges at the given input (lambda, Psi at k=0).
class SingularityError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
public:
  using Error::Error;
};

/// A bracketed root solve failed to converge; signals a bug, not bad input.
class NonconvergenceError : public Error {
public:
  using Error::Error;
};

/// A trajectory does not cover the requested time horizon.
class InsufficientTrajectoryError : public Error {
public:
  using Error::Error;
};

/// A simulation exceeded its jump budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Two grid profiles do not share the same discretization.
class GridMismatchError : public Error {
public:
  using Error::Error;
};

/// Invalid configuration value.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace fraclab
