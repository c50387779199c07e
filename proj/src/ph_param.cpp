// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#include "phmor/ph_param.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "phmor/errors.hpp"

namespace phmor
{

Matrix UpperFromVec(const Vector &v, Index n)
{
  if (v.size() != n * (n + 1) / 2)
  {
    throw Error(ErrorCode::LengthMismatch,
                "upper-triangular packing needs n(n+1)/2 = " + std::to_string(n * (n + 1) / 2) +
                    " entries, got " + std::to_string(v.size()));
  }
  Matrix t = Matrix::Zero(n, n);
  Index k = 0;
  for (Index i = 0; i < n; i++)
  {
    for (Index j = i; j < n; j++)
    {
      t(i, j) = v(k++);
    }
  }
  return t;
}

Matrix StrictUpperFromVec(const Vector &v, Index n)
{
  if (v.size() != n * (n - 1) / 2)
  {
    throw Error(ErrorCode::LengthMismatch,
                "strict-upper packing needs n(n-1)/2 = " + std::to_string(n * (n - 1) / 2) +
                    " entries, got " + std::to_string(v.size()));
  }
  Matrix t = Matrix::Zero(n, n);
  Index k = 0;
  for (Index i = 0; i < n; i++)
  {
    for (Index j = i + 1; j < n; j++)
    {
      t(i, j) = v(k++);
    }
  }
  return t;
}

Matrix MatrixFromVec(const Vector &v, Index rows, Index cols)
{
  if (v.size() != rows * cols)
  {
    throw Error(ErrorCode::LengthMismatch,
                "reshape needs " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(v.size()));
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix PsdUpperFactor(const Matrix &w, double tol_rel)
{
  const Index n = w.rows();
  Matrix work = 0.5 * (w + w.transpose());
  Matrix u = Matrix::Zero(n, n);
  const double tol = tol_rel * std::max(work.trace(), 0.0) + 1e-300;
  for (Index q = n - 1; q >= 0; q--)
  {
    const double d = work(q, q);
    if (d > tol)
    {
      const double uqq = std::sqrt(d);
      u(q, q) = uqq;
      if (q > 0)
      {
        Vector col = work.block(0, q, q, 1) / uqq;
        u.block(0, q, q, 1) = col;
        work.topLeftCorner(q, q) -= col * col.transpose();
      }
    }
    else if (d < -tol)
    {
      throw Error(ErrorCode::NotPsd, "negative pivot " + std::to_string(d) +
                                         " in PSD factorization");
    }
    else
    {
      // Null direction: the whole row/column must vanish for a PSD matrix.
      if (q > 0 && work.block(0, q, q, 1).cwiseAbs().maxCoeff() > std::sqrt(tol) + 1e3 * tol)
      {
        throw Error(ErrorCode::NotPsd, "zero pivot with nonzero off-diagonal entries");
      }
    }
  }
  return u;
}

PhParameterVector PhParameterVector::Zero(Index r, Index m)
{
  PhParameterVector pv;
  pv.r = r;
  pv.m = m;
  pv.theta = Vector::Zero(pv.Size());
  pv.frozen.assign(pv.Size(), 0);
  return pv;
}

PhParameterVector PhParameterVector::Random(Index r, Index m, std::uint64_t seed, double scale)
{
  PhParameterVector pv = Zero(r, m);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (Index k = 0; k < pv.theta.size(); k++)
  {
    pv.theta(k) = dist(rng);
  }
  return pv;
}

Index PhParameterVector::FreeCount() const
{
  Index count = 0;
  for (auto f : frozen)
  {
    count += (f == 0);
  }
  return count;
}

void PhParameterVector::Validate() const
{
  if (r < 1 || m < 1)
  {
    throw Error(ErrorCode::LengthMismatch, "parameter vector needs r >= 1 and m >= 1");
  }
  if (theta.size() != Size() || static_cast<Index>(frozen.size()) != Size())
  {
    throw Error(ErrorCode::LengthMismatch,
                "parameter vector of order r=" + std::to_string(r) + ", m=" + std::to_string(m) +
                    " must have " + std::to_string(Size()) + " entries, got " +
                    std::to_string(theta.size()));
  }
}

ReducedPhModel AssemblePh(const PhParameterVector &pv)
{
  pv.Validate();
  const Index r = pv.r, m = pv.m;

  const Matrix tj = StrictUpperFromVec(pv.SegJ(), r);
  const Matrix tw = UpperFromVec(pv.SegW(), r + m);
  const Matrix tq = UpperFromVec(pv.SegQ(), r);
  const Matrix tn = StrictUpperFromVec(pv.SegN(), m);

  ReducedPhModel model;
  model.J = tj.transpose() - tj;
  const Matrix w = tw * tw.transpose();
  model.R = w.topLeftCorner(r, r);
  model.P = w.topRightCorner(r, m);
  model.S = w.bottomRightCorner(m, m);
  model.Q = tq * tq.transpose();
  model.G = MatrixFromVec(pv.SegG(), r, m);
  model.N = tn.transpose() - tn;
  model.theta = pv;
  return model;
}

PhFactors AssembleFactors(const PhParameterVector &pv)
{
  pv.Validate();
  PhFactors f;
  f.tw = UpperFromVec(pv.SegW(), pv.r + pv.m);
  f.tq = UpperFromVec(pv.SegQ(), pv.r);
  return f;
}

TransferSample RomTransfer(const ReducedPhModel &model, Complex s, bool with_derivative)
{
  const Index r = model.Order();
  const ComplexMatrix k =
      s * ComplexMatrix::Identity(r, r) - model.A().cast<Complex>();
  Eigen::PartialPivLU<ComplexMatrix> lu(k);
  // PartialPivLU has no rank check; a singular shift surfaces as non-finite
  // entries after the solve.
  const ComplexMatrix x = lu.solve(model.B().cast<Complex>());
  TransferSample out;
  out.s = s;
  out.value = model.C().cast<Complex>() * x + model.D().cast<Complex>();
  if (!out.value.allFinite())
  {
    throw Error(ErrorCode::SingularShift, "reduced resolvent singular at the requested point");
  }
  if (with_derivative)
  {
    out.derivative = -(model.C().cast<Complex>() * lu.solve(x));
  }
  return out;
}

TransferSample RomTransfer(const PhParameterVector &pv, Complex s, bool with_derivative)
{
  return RomTransfer(AssemblePh(pv), s, with_derivative);
}

std::vector<ComplexMatrix> RomParamJacobian(const PhParameterVector &pv, Complex s)
{
  const ReducedPhModel model = AssemblePh(pv);
  const PhFactors factors = AssembleFactors(pv);
  const Index r = pv.r, m = pv.m;

  const ComplexMatrix k = s * ComplexMatrix::Identity(r, r) - model.A().cast<Complex>();
  Eigen::PartialPivLU<ComplexMatrix> lu(k);
  const ComplexMatrix x = lu.solve(model.B().cast<Complex>());        // K⁻¹B
  const ComplexMatrix mt = lu.transpose().solve(model.C().transpose().cast<Complex>());
  const ComplexMatrix mm = mt.transpose();                            // C K⁻¹
  if (!x.allFinite() || !mm.allFinite())
  {
    throw Error(ErrorCode::SingularShift, "reduced resolvent singular at the requested point");
  }

  const Matrix jr = model.J - model.R;
  const Matrix gp = model.G + model.P;
  const ComplexMatrix qx = (model.Q * x.real()).cast<Complex>() +
                           Complex(0, 1) * (model.Q * x.imag()).cast<Complex>();

  std::vector<ComplexMatrix> jac(static_cast<std::size_t>(pv.Size()),
                                 ComplexMatrix::Zero(m, m));
  Index k_idx = 0;

  // θ_J: ∂J = e_q e_pᵀ - e_p e_qᵀ, ∂H = M ∂J Q X.
  for (Index p = 0; p < r; p++)
  {
    for (Index q = p + 1; q < r; q++)
    {
      jac[k_idx] = mm.col(q) * qx.row(p) - mm.col(p) * qx.row(q);
      k_idx++;
    }
  }

  // θ_W: W = T Tᵀ, ∂W = e_p tᵀ + t e_pᵀ with t the q-th column of T.
  // ∂H = ∂PᵀQ X - M ∂R Q X - M ∂P + ∂S.
  for (Index p = 0; p < r + m; p++)
  {
    for (Index q = p; q < r + m; q++)
    {
      Vector t = factors.tw.col(q);
      Matrix dw = Matrix::Zero(r + m, r + m);
      dw.col(p) += t;
      dw.row(p) += t.transpose();
      const Matrix dr = dw.topLeftCorner(r, r);
      const Matrix dp = dw.topRightCorner(r, m);
      const Matrix ds = dw.bottomRightCorner(m, m);
      jac[k_idx] = dp.transpose().cast<Complex>() * qx - mm * (dr.cast<Complex>() * qx) -
                   mm * dp.cast<Complex>() + ds.cast<Complex>();
      k_idx++;
    }
  }

  // θ_Q: ∂Q = e_p tᵀ + t e_pᵀ with t the q-th column of T_Q.
  // ∂H = [(G+P)ᵀ + M(J-R)] ∂Q X.
  const ComplexMatrix zl = gp.transpose().cast<Complex>() + mm * jr.cast<Complex>();
  for (Index p = 0; p < r; p++)
  {
    for (Index q = p; q < r; q++)
    {
      Vector t = factors.tq.col(q);
      const ComplexMatrix tx = t.transpose().cast<Complex>() * x;  // 1 x m
      const ComplexMatrix px = x.row(p);                           // 1 x m
      jac[k_idx] = zl.col(p) * tx + (zl * t.cast<Complex>()) * px;
      k_idx++;
    }
  }

  // θ_G: ∂G = e_p e_qᵀ (column-major slots), ∂H = ∂GᵀQ X + M ∂G.
  for (Index q = 0; q < m; q++)
  {
    for (Index p = 0; p < r; p++)
    {
      ComplexMatrix dh = ComplexMatrix::Zero(m, m);
      dh.row(q) += qx.row(p);
      dh.col(q) += mm.col(p);
      jac[k_idx] = dh;
      k_idx++;
    }
  }

  // θ_N: ∂D = -∂N = e_p e_qᵀ - e_q e_pᵀ.
  for (Index p = 0; p < m; p++)
  {
    for (Index q = p + 1; q < m; q++)
    {
      ComplexMatrix dh = ComplexMatrix::Zero(m, m);
      dh(p, q) = 1.0;
      dh(q, p) = -1.0;
      jac[k_idx] = dh;
      k_idx++;
    }
  }

  return jac;
}

StateSpaceAdjoints StateSpaceAdjoints::Zero(Index r, Index m)
{
  StateSpaceAdjoints adj;
  adj.a = Matrix::Zero(r, r);
  adj.b = Matrix::Zero(r, m);
  adj.c = Matrix::Zero(m, r);
  adj.d = Matrix::Zero(m, m);
  return adj;
}

Vector ThetaGradientFromAdjoints(const ReducedPhModel &model, const PhFactors &factors,
                                 const StateSpaceAdjoints &adj)
{
  const PhParameterVector &pv = model.theta;
  const Index r = pv.r, m = pv.m;

  // Pull the adjoints of A = (J-R)Q, B = G-P, C = (G+P)ᵀQ, D = S-N back to
  // the individual coefficient matrices.
  const Matrix d_j = adj.a * model.Q;
  const Matrix d_r = -d_j;
  Matrix d_q = (model.J - model.R).transpose() * adj.a + (model.G + model.P) * adj.c;
  const Matrix d_gp = model.Q * adj.c.transpose();
  const Matrix d_g = d_gp + adj.b;
  const Matrix d_p = d_gp - adj.b;
  const Matrix d_s = adj.d;
  const Matrix d_n = -adj.d;

  Vector grad = Vector::Zero(pv.Size());
  Index k = 0;

  for (Index p = 0; p < r; p++)
  {
    for (Index q = p + 1; q < r; q++)
    {
      grad(k++) = d_j(q, p) - d_j(p, q);
    }
  }

  Matrix d_w = Matrix::Zero(r + m, r + m);
  d_w.topLeftCorner(r, r) = d_r;
  d_w.topRightCorner(r, m) = d_p;
  d_w.bottomRightCorner(m, m) = d_s;
  const Matrix gw = (d_w + d_w.transpose()) * factors.tw;
  for (Index p = 0; p < r + m; p++)
  {
    for (Index q = p; q < r + m; q++)
    {
      grad(k++) = gw(p, q);
    }
  }

  const Matrix gq = (d_q + d_q.transpose()) * factors.tq;
  for (Index p = 0; p < r; p++)
  {
    for (Index q = p; q < r; q++)
    {
      grad(k++) = gq(p, q);
    }
  }

  for (Index q = 0; q < m; q++)
  {
    for (Index p = 0; p < r; p++)
    {
      grad(k++) = d_g(p, q);
    }
  }

  for (Index p = 0; p < m; p++)
  {
    for (Index q = p + 1; q < m; q++)
    {
      grad(k++) = d_n(q, p) - d_n(p, q);
    }
  }

  return grad;
}

}  // namespace phmor
