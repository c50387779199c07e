// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PHMOR_ERRORS_HPP
#define PHMOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phmor
{

// Every failure mode of the toolkit maps to one category so that batch
// drivers can report machine-readable exit codes.
enum class ErrorCode
{
  InvalidSystem,        // constructor invariants violated (skewness, PSD, regularity)
  InputError,           // malformed manifest, missing file, bad CLI arguments
  IoError,              // file could not be read or written
  SingularShift,        // sE - (J-R)Q singular at the requested frequency
  IndexTooHigh,         // algebraic block L22 singular: index > 1 (or close to it)
  NotNormalized,        // operation requires Q = I
  NoConvergence,        // iterative estimate did not stabilize
  NotStrictlyProper,    // transfer function does not decay at large frequencies
  EmptyGrid,            // frequency grid without points
  LengthMismatch,       // packed vector length does not match the target shape
  OptimizerFailure,     // inner minimization produced a non-finite objective
  NotPsd,               // matrix expected to be positive semidefinite is not
  DefectiveMatrix,      // eigenvalues not simple within the gap tolerance
  UnstableSystem,       // eigenvalues not in the open left half-plane
  NotPositiveDefinite,  // Lyapunov certificate Q is singular or indefinite
  NonFiniteObjective,   // objective or gradient not finite at the start point
};

const char *ToString(ErrorCode code);

// Process exit code used by the CLI for the given category (0 is success).
int ExitCode(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ToString(code)) + ": " + message), code_(code)
  {
  }

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace phmor

#endif  // PHMOR_ERRORS_HPP
