#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Argument outside the mathematical domain of an operation (r >= 1,
// |x| > 1, n < 2, invalid class parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series or iteration failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested convention is not defined for this class / parameter set.
class ConventionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base for root-finding failures.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSignChange : public SolverError {
 public:
  using SolverError::SolverError;
};

class NonMonotoneDetected : public SolverError {
 public:
  using SolverError::SolverError;
};

class InvalidProblem : public SolverError {
 public:
  using SolverError::SolverError;
};

class BracketFailure : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace bohr
