// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#include "phmor/errors.hpp"

namespace phmor
{

const char *ToString(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::InvalidSystem:
      return "InvalidSystem";
    case ErrorCode::InputError:
      return "InputError";
    case ErrorCode::IoError:
      return "IoError";
    case ErrorCode::SingularShift:
      return "SingularShift";
    case ErrorCode::IndexTooHigh:
      return "IndexTooHigh";
    case ErrorCode::NotNormalized:
      return "NotNormalized";
    case ErrorCode::NoConvergence:
      return "NoConvergence";
    case ErrorCode::NotStrictlyProper:
      return "NotStrictlyProper";
    case ErrorCode::EmptyGrid:
      return "EmptyGrid";
    case ErrorCode::LengthMismatch:
      return "LengthMismatch";
    case ErrorCode::OptimizerFailure:
      return "OptimizerFailure";
    case ErrorCode::NotPsd:
      return "NotPsd";
    case ErrorCode::DefectiveMatrix:
      return "DefectiveMatrix";
    case ErrorCode::UnstableSystem:
      return "UnstableSystem";
    case ErrorCode::NotPositiveDefinite:
      return "NotPositiveDefinite";
    case ErrorCode::NonFiniteObjective:
      return "NonFiniteObjective";
  }
  return "UnknownError";
}

int ExitCode(ErrorCode code)
{
  // Start above the conventional shell/SIGNAL range.
  return 64 + static_cast<int>(code);
}

}  // namespace phmor
