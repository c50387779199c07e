// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PHMOR_PH_PARAM_HPP
#define PHMOR_PH_PARAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "phmor/types.hpp"

namespace phmor
{

// --- Packing maps -----------------------------------------------------------
//
// A parameter vector is mapped onto structured matrices through three packing
// maps. UpperFromVec and StrictUpperFromVec fill the (strict) upper triangle
// row-wise, top row first; MatrixFromVec is a column-major reshape. All
// gradients in this toolkit assume these conventions.

// v of length n(n+1)/2 -> upper triangular n x n (diagonal included).
Matrix UpperFromVec(const Vector &v, Index n);

// v of length n(n-1)/2 -> strictly upper triangular n x n.
Matrix StrictUpperFromVec(const Vector &v, Index n);

// v of length rows*cols -> rows x cols, column-major.
Matrix MatrixFromVec(const Vector &v, Index rows, Index cols);

// Upper-triangular factor U with U Uᵀ = W for a symmetric PSD W, processing
// trailing indices first with zero-fill for null directions (pivot tolerance
// relative to trace(W)). Throws NotPsd when W is indefinite beyond tolerance.
Matrix PsdUpperFactor(const Matrix &w, double tol_rel = 1e-12);

// --- Parameter vector -------------------------------------------------------

// Flat parameter vector of a reduced pH model of order r with m ports,
// partitioned as [θ_J | θ_W | θ_Q | θ_G | θ_N] with a freeze mask used to
// pin feedthrough-related entries during optimization.
struct PhParameterVector
{
  Index r = 0;
  Index m = 0;
  Vector theta;
  std::vector<std::uint8_t> frozen;  // 1 = excluded from optimization

  static PhParameterVector Zero(Index r, Index m);
  // Entries i.i.d. uniform on [-scale, scale], deterministic for a given seed.
  static PhParameterVector Random(Index r, Index m, std::uint64_t seed, double scale = 0.1);

  // Partition sizes and offsets; the five segments exactly tile theta.
  Index SizeJ() const { return r * (r - 1) / 2; }
  Index SizeW() const { return (r + m) * (r + m + 1) / 2; }
  Index SizeQ() const { return r * (r + 1) / 2; }
  Index SizeG() const { return r * m; }
  Index SizeN() const { return m * (m - 1) / 2; }
  Index OffsetJ() const { return 0; }
  Index OffsetW() const { return SizeJ(); }
  Index OffsetQ() const { return OffsetW() + SizeW(); }
  Index OffsetG() const { return OffsetQ() + SizeQ(); }
  Index OffsetN() const { return OffsetG() + SizeG(); }
  Index Size() const { return OffsetN() + SizeN(); }

  // θ_W = [θ_W1 | θ_W2]: the trailing m(m+1)/2 entries parameterize the
  // feedthrough block Ξ₃ alone.
  Index SizeW2() const { return m * (m + 1) / 2; }
  Index OffsetW2() const { return OffsetQ() - SizeW2(); }

  Eigen::VectorBlock<const Vector> SegJ() const { return theta.segment(OffsetJ(), SizeJ()); }
  Eigen::VectorBlock<const Vector> SegW() const { return theta.segment(OffsetW(), SizeW()); }
  Eigen::VectorBlock<const Vector> SegQ() const { return theta.segment(OffsetQ(), SizeQ()); }
  Eigen::VectorBlock<const Vector> SegG() const { return theta.segment(OffsetG(), SizeG()); }
  Eigen::VectorBlock<const Vector> SegN() const { return theta.segment(OffsetN(), SizeN()); }

  Index FreeCount() const;
  void Validate() const;  // throws LengthMismatch on inconsistent sizes
};

// --- Reduced model ----------------------------------------------------------

// Dense order-r pH-ODE produced by the Lemma-style parameterization. The
// structural invariants (J, N skew; W, Q PSD) hold by construction for every
// parameter vector.
struct ReducedPhModel
{
  Matrix J, R, Q;  // r x r
  Matrix G, P;     // r x m
  Matrix S, N;     // m x m
  PhParameterVector theta;  // provenance

  Index Order() const { return J.rows(); }
  Index Ports() const { return S.rows(); }

  Matrix A() const { return (J - R) * Q; }      // state matrix
  Matrix B() const { return G - P; }            // input matrix
  Matrix C() const { return (G + P).transpose() * Q; }  // output matrix
  Matrix D() const { return S - N; }            // feedthrough
};

// Builds J, R, P, S, Q, G, N from the packed parameter vector.
ReducedPhModel AssemblePh(const PhParameterVector &pv);

// Triangular factors of W(θ) and Q(θ) for gradient assembly.
struct PhFactors
{
  Matrix tw;  // (r+m) x (r+m) upper triangular, W = tw twᵀ
  Matrix tq;  // r x r upper triangular, Q = tq tqᵀ
};
PhFactors AssembleFactors(const PhParameterVector &pv);

// Transfer function H_r(s, θ) of the assembled model, with optional dH_r/ds.
TransferSample RomTransfer(const PhParameterVector &pv, Complex s,
                           bool with_derivative = false);
TransferSample RomTransfer(const ReducedPhModel &model, Complex s,
                           bool with_derivative = false);

// ∂H_r(s, θ)/∂θ_k for every parameter (frozen entries included; callers mask
// as needed). Index k follows the packing order of theta.
std::vector<ComplexMatrix> RomParamJacobian(const PhParameterVector &pv, Complex s);

// --- Adjoint-based gradient assembly ----------------------------------------
//
// Losses of the form L(H_r) are differentiated in two stages: the caller
// accumulates the real adjoints of the state-space quantities A = (J-R)Q,
// B = G-P, C = (G+P)ᵀQ and D = S-N over all samples, and this helper folds
// them through the packing maps into a θ-gradient in one pass.
struct StateSpaceAdjoints
{
  Matrix a;  // r x r, dL/dA
  Matrix b;  // r x m, dL/dB
  Matrix c;  // m x r, dL/dC
  Matrix d;  // m x m, dL/dD

  static StateSpaceAdjoints Zero(Index r, Index m);
};

Vector ThetaGradientFromAdjoints(const ReducedPhModel &model, const PhFactors &factors,
                                 const StateSpaceAdjoints &adj);

}  // namespace phmor

#endif  // PHMOR_PH_PARAM_HPP
