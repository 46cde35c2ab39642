// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_LINALG_HPP
#define KREINLAB_LINALG_HPP

#include "kreinlab/common.hpp"

namespace kreinlab::linalg
{

// Orthonormal basis of the column space of x. Singular values at or below
// tol * scale count as zero; scale <= 0 means the largest singular value.
Matrix ColumnSpan(const Matrix &x, double tol = kDefaultTol, double scale = 0.0);

// Orthonormal basis of {c : x c = 0}, same cutoff rule as ColumnSpan.
Matrix NullSpace(const Matrix &x, double tol = kDefaultTol, double scale = 0.0);

// Singular values, descending.
RealVector SingularValues(const Matrix &x);

// Largest singular value; zero for empty matrices.
double SpectralNorm(const Matrix &x);

// Hermitian part (x + x^*) / 2.
Matrix Hermitian(const Matrix &x);

// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEigen
{
  RealVector values;
  Matrix vectors;
};
HermitianEigen EigHermitian(const Matrix &h);

// Principal square root of a Hermitian positive semidefinite matrix; tiny
// negative eigenvalues from rounding are clamped to zero, and so are
// eigenvalues at or below rel_cutoff times the largest one.
Matrix SqrtPsd(const Matrix &h, double rel_cutoff = 0.0);

// Inverse square root of a Hermitian positive definite matrix.
Matrix InvSqrtPd(const Matrix &h);

// Minimum-norm least squares solution of a x = b.
Matrix Solve(const Matrix &a, const Matrix &b);

}  // namespace kreinlab::linalg

#endif  // KREINLAB_LINALG_HPP
