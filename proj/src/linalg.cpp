// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace kreinlab::linalg
{

namespace
{

Index NumericalRank(const RealVector &sigma, double tol, double scale)
{
  if (sigma.size() == 0 || sigma(0) <= 0.0)
  {
    return 0;
  }
  const double cut = tol * (scale > 0.0 ? scale : sigma(0));
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cut)
  {
    ++rank;
  }
  return rank;
}

// Divide-and-conquer SVD is fast but, in Eigen 3.4, can return wrong
// singular vectors when singular values cluster heavily. Every result is
// checked and recomputed with one-sided Jacobi when the check fails.
struct Svd
{
  RealVector sigma;
  Matrix u;  // thin
  Matrix v;  // full
};

constexpr double kSvdCheck = 1e-11;

bool Orthonormal(const Matrix &q, double bound)
{
  return (q.adjoint() * q - Matrix::Identity(q.cols(), q.cols())).norm() <= bound;
}

template <typename Solver>
Svd Extract(const Solver &svd, bool want_u, bool want_v)
{
  Svd out{svd.singularValues(), Matrix(), Matrix()};
  if (want_u)
  {
    out.u = svd.matrixU();
  }
  if (want_v)
  {
    out.v = svd.matrixV();
  }
  return out;
}

bool Trustworthy(const Matrix &x, const Svd &s, bool want_u, bool want_v)
{
  const double fro = x.norm();
  const double bound = kSvdCheck * std::sqrt(double(std::max(x.rows(), x.cols()))) * std::max(fro, 1e-300);
  if (std::abs(s.sigma.squaredNorm() - fro * fro) > kSvdCheck * std::max(fro * fro, 1e-300))
  {
    return false;
  }
  const Index k = s.sigma.size();
  if (want_u)
  {
    // U^* x has rows sigma_k v_k^* and U U^* x = x.
    const Matrix ux = s.u.adjoint() * x;
    if (!Orthonormal(s.u, kSvdCheck * std::sqrt(double(k))) || (x - s.u * ux).norm() > bound ||
        (ux.rowwise().norm() - s.sigma).norm() > bound)
    {
      return false;
    }
  }
  if (want_v)
  {
    if (!Orthonormal(s.v, kSvdCheck * std::sqrt(double(s.v.cols()))))
    {
      return false;
    }
    // x V = [U sigma, 0]: the trailing block must vanish.
    const Matrix xv = x * s.v;
    if (xv.rightCols(x.cols() - k).norm() > bound ||
        (xv.leftCols(k).colwise().norm().transpose() - s.sigma).norm() > bound)
    {
      return false;
    }
  }
  return true;
}

Svd Decompose(const Matrix &x, bool want_u, bool want_v)
{
  const unsigned opts = (want_u ? Eigen::ComputeThinU : 0) | (want_v ? Eigen::ComputeFullV : 0);
  Svd fast = Extract(Eigen::BDCSVD<Matrix>(x, opts), want_u, want_v);
  if (Trustworthy(x, fast, want_u, want_v))
  {
    return fast;
  }
  return Extract(Eigen::JacobiSVD<Matrix>(x, opts), want_u, want_v);
}

}  // namespace

RealVector SingularValues(const Matrix &x)
{
  if (x.size() == 0)
  {
    return RealVector(0);
  }
  return Decompose(x, false, false).sigma;
}

Matrix ColumnSpan(const Matrix &x, double tol, double scale)
{
  if (x.rows() == 0 || x.cols() == 0)
  {
    return Matrix(x.rows(), 0);
  }
  const Svd svd = Decompose(x, true, false);
  const Index rank = NumericalRank(svd.sigma, tol, scale);
  return svd.u.leftCols(rank);
}

Matrix NullSpace(const Matrix &x, double tol, double scale)
{
  if (x.cols() == 0)
  {
    return Matrix(0, 0);
  }
  if (x.rows() == 0)
  {
    return Matrix::Identity(x.cols(), x.cols());
  }
  const Svd svd = Decompose(x, false, true);
  const Index rank = NumericalRank(svd.sigma, tol, scale);
  return svd.v.rightCols(x.cols() - rank);
}

double SpectralNorm(const Matrix &x)
{
  if (x.size() == 0)
  {
    return 0.0;
  }
  return SingularValues(x)(0);
}

Matrix Hermitian(const Matrix &x)
{
  return 0.5 * (x + x.adjoint());
}

HermitianEigen EigHermitian(const Matrix &h)
{
  if (h.rows() == 0)
  {
    return {RealVector(0), Matrix(0, 0)};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(Hermitian(h));
  return {eig.eigenvalues(), eig.eigenvectors()};
}

Matrix SqrtPsd(const Matrix &h, double rel_cutoff)
{
  const auto eig = EigHermitian(h);
  RealVector values = eig.values.cwiseMax(0.0);
  const double top = values.size() > 0 ? values.maxCoeff() : 0.0;
  for (Index k = 0; k < values.size(); ++k)
  {
    if (values(k) <= rel_cutoff * top)
    {
      values(k) = 0.0;
    }
  }
  const RealVector roots = values.cwiseSqrt();
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Matrix InvSqrtPd(const Matrix &h)
{
  const auto eig = EigHermitian(h);
  if (eig.values.size() > 0 && eig.values(0) <= 0.0)
  {
    throw InvariantViolation("InvSqrtPd: matrix is not positive definite");
  }
  const RealVector roots = eig.values.cwiseSqrt().cwiseInverse();
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Matrix Solve(const Matrix &a, const Matrix &b)
{
  if (a.cols() == 0)
  {
    return Matrix(0, b.cols());
  }
  if (a.rows() == 0)
  {
    return Matrix::Zero(a.cols(), b.cols());
  }
  return a.completeOrthogonalDecomposition().solve(b);
}

}  // namespace kreinlab::linalg
