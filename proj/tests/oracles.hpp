// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Test-only reference computations. They deliberately take a different
// numerical route than the library (LU kernels, normal equations, direct
// sums) so agreement is evidence rather than tautology.

#ifndef KREINLAB_TESTS_ORACLES_HPP
#define KREINLAB_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <Eigen/LU>

#include "kreinlab/krein.hpp"

namespace kreinlab::oracle
{

inline Matrix Diag(std::initializer_list<Complex> d)
{
  Vector v(Index(d.size()));
  Index k = 0;
  for (Complex z : d)
  {
    v(k++) = z;
  }
  return v.asDiagonal();
}

inline Vector Unit(Index n, Index k)
{
  Vector e = Vector::Zero(n);
  e(k) = 1.0;
  return e;
}

// Orthoprojector onto the column space of a full-column-rank matrix.
inline Matrix Projector(const Matrix &a)
{
  if (a.cols() == 0)
  {
    return Matrix::Zero(a.rows(), a.rows());
  }
  return a * (a.adjoint() * a).inverse() * a.adjoint();
}

// ||P_A - P_B|| from raw spanning sets of full column rank.
inline double ProjectorGap(const Matrix &a, const Matrix &b)
{
  const Matrix d = Projector(a) - Projector(b);
  if (d.size() == 0)
  {
    return 0.0;
  }
  return Eigen::JacobiSVD<Matrix>(d).singularValues()(0);
}

// Kernel by full-pivoting LU with an explicit threshold.
inline Matrix Kernel(const Matrix &a, double threshold = 1e-10)
{
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(threshold);
  return lu.kernel();
}

inline int KernelDim(const Matrix &a, double threshold = 1e-10)
{
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(threshold);
  return int(a.cols() - lu.rank());
}

// gamma_T[x, y] straight from its definition: -i([x, T y] - [T x, y]).
inline Complex GammaDirect(const Matrix &j, const Matrix &m, const Vector &x, const Vector &y)
{
  return -kI * (x.dot(j * (m * y)) - (m * x).dot(j * y));
}

// F1: T = i on C^1, J = 1.
inline OperatorWithDomain F1()
{
  return OperatorWithDomain(KreinSpace::Hilbert(1), Diag({kI}));
}
// F2: T = diag(1, i), J = I.
inline OperatorWithDomain F2()
{
  return OperatorWithDomain(KreinSpace::Hilbert(2), Diag({1.0, kI}));
}
// F3: T = diag(i, -i), J = diag(1, -1).
inline OperatorWithDomain F3()
{
  return OperatorWithDomain(KreinSpace(Diag({1.0, -1.0})), Diag({kI, -kI}));
}

}  // namespace kreinlab::oracle

#endif  // KREINLAB_TESTS_ORACLES_HPP
