// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/ensembles.hpp"

#include <algorithm>
#include <cmath>

namespace kreinlab
{

namespace
{

Matrix RandomHermitian(Index n, Rng &rng)
{
  const Matrix x = RandomGaussian(n, n, rng);
  return (x + x.adjoint()) / (2.0 * std::sqrt(double(n)));
}

Index UniformIndex(Index lo, Index hi, Rng &rng)
{
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

}  // namespace

Matrix RandomCanonicalSymmetry(Index n, Rng &rng, Matrix *unitary, RealVector *signs)
{
  const Matrix u = RandomUnitary(n, rng);
  RealVector s(n);
  std::bernoulli_distribution coin(0.5);
  for (Index k = 0; k < n; ++k)
  {
    s(k) = coin(rng) ? 1.0 : -1.0;
  }
  if (unitary)
  {
    *unitary = u;
  }
  if (signs)
  {
    *signs = s;
  }
  return u * s.cast<Complex>().asDiagonal() * u.adjoint();
}

OperatorWithDomain RandomDissipative(const InstanceOptions &opts, Rng &rng)
{
  const Index n = opts.dim;
  Require(n >= 1, "RandomDissipative: dim must be positive");
  Require(opts.real_eigenvalues <= n, "RandomDissipative: too many real eigenvalues");
  Matrix u;
  RealVector signs;
  const Matrix j = RandomCanonicalSymmetry(n, rng, &u, &signs);
  const Index kr = opts.real_eigenvalues;

  // Engineered eigenvectors are columns of U, so J v = +-v.
  const Matrix v = u.leftCols(kr);
  const Matrix pc = Matrix::Identity(n, n) - v * v.adjoint();
  const Index free = n - kr;
  Index rank = opts.dissipative_rank < 0 ? UniformIndex(std::min<Index>(1, free), free, rng)
                                         : std::min(opts.dissipative_rank, free);
  const Matrix b = pc * RandomGaussian(n, rank, rng) / std::sqrt(double(n));
  Matrix h = pc * RandomHermitian(n, rng) * pc;
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  for (Index k = 0; k < kr; ++k)
  {
    h += value(rng) * v.col(k) * v.col(k).adjoint();
  }
  const Matrix a = h + kI * (b * b.adjoint());

  const Index d = opts.domain_dim < 0 ? n : std::clamp(opts.domain_dim, std::max<Index>(kr, 1), n);
  Matrix span(n, d);
  span << v, RandomGaussian(n, d - kr, rng);
  const Subspace domain = d == n ? Subspace::Full(n) : Subspace::Span(span);
  return OperatorWithDomain(KreinSpace(j), j * a, domain);
}

OperatorWithDomain EpsilonFamily(Index dim, double eps, std::uint64_t seed)
{
  Require(dim >= 2, "EpsilonFamily: dim must be at least 2");
  Rng rng(seed);
  const Matrix j = RandomCanonicalSymmetry(dim, rng);
  const Matrix h = RandomHermitian(dim, rng);
  const Matrix b = RandomGaussian(dim, 2, rng) / std::sqrt(double(dim));
  const Matrix p = b.col(0) * b.col(0).adjoint() + eps * b.col(1) * b.col(1).adjoint();
  return OperatorWithDomain(KreinSpace(j), j * (h + kI * p));
}

}  // namespace kreinlab
