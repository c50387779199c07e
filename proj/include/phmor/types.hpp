// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PHMOR_TYPES_HPP
#define PHMOR_TYPES_HPP

#include <complex>
#include <optional>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace phmor
{

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using ComplexSparseMatrix = Eigen::SparseMatrix<Complex>;
using Index = Eigen::Index;

// One evaluation of a transfer function H at a complex frequency point,
// optionally together with dH/ds.
struct TransferSample
{
  Complex s;
  ComplexMatrix value;
  std::optional<ComplexMatrix> derivative;
};

// Constant (polynomial) part D0 of an index-one transfer function together
// with its symmetric/skew-symmetric split D0 = S0 - N0.
struct FeedthroughData
{
  Matrix D0;
  Matrix S0;  // ½(D0ᵀ + D0), symmetric PSD for passive systems
  Matrix N0;  // ½(D0ᵀ - D0), skew-symmetric
};

// Builds the S0/N0 split from a constant feedthrough matrix.
FeedthroughData SplitFeedthrough(const Matrix &d0);

}  // namespace phmor

#endif  // PHMOR_TYPES_HPP
