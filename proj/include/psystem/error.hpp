#pragma once

#include <stdexcept>
#include <string>

namespace psystem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or parameter combinations (maps to CLI exit code 2).
class UsageError : public Error {
public:
  using Error::Error;
};

/// Failures of a numerical method or of a mathematical hypothesis
/// (maps to CLI exit code 3).
class NumericalError : public Error {
public:
  using Error::Error;
};

class BracketError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Argument outside the domain of a function, or a non-finite evaluation.
class DomainError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Strain at or below -1 (interpenetration of matter).
class StrainDomainError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Adaptive quadrature did not reach the requested tolerance.
class AccuracyError : public NumericalError {
public:
  AccuracyError(const std::string& what, double estimate, double error)
      : NumericalError(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_; }

private:
  double estimate_;
  double error_;
};

class NoSolutionError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class HypothesisError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SimulationError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

} // namespace psystem
