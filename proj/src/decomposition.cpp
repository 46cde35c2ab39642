// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "kreinlab/linalg.hpp"

namespace kreinlab
{

OperatorWithDomain SymmetricPart(const OperatorWithDomain &t)
{
  const Classification c = Classify(t);
  if (c == Classification::kNeither)
  {
    throw NotDissipative("SymmetricPart: operator is not dissipative");
  }
  if (c == Classification::kSymmetric)
  {
    return t;
  }
  const Matrix g = GammaGram(t);
  const auto eig = linalg::EigHermitian(g);
  const double top = eig.values(eig.values.size() - 1);
  Index kernel = 0;
  while (kernel < eig.values.size() && eig.values(kernel) <= kKernelTol * top)
  {
    ++kernel;
  }
  const Matrix basis = t.Domain().Basis() * eig.vectors.leftCols(kernel);
  return t.Restrict(Subspace::FromOrthonormal(basis, t.Tol()));
}

OperatorWithDomain DissipativePart(const OperatorWithDomain &t, const OperatorWithDomain &s)
{
  const Matrix &q = t.Domain().Basis();
  const Matrix ks = linalg::Solve(q, s.Domain().Basis());
  if ((q * ks - s.Domain().Basis()).norm() > kGapTol * std::max<double>(1.0, double(ks.cols())))
  {
    throw ValidationError("DissipativePart: D_S is not contained in D_T");
  }
  // Coordinates a with <Q a, s>_T = 0 for every s in D_S.
  const Matrix coords = linalg::NullSpace(ks.adjoint() * GraphGram(t), t.Tol());
  return t.Restrict(Subspace::Span(q * coords, t.Tol()));
}

Splitting Split(const OperatorWithDomain &t)
{
  OperatorWithDomain s = SymmetricPart(t);
  OperatorWithDomain n = DissipativePart(t, s);
  if (s.DomainDim() + n.DomainDim() != t.DomainDim())
  {
    throw InvariantViolation("Split: dim D_S + dim D_N != dim D_T");
  }
  Matrix gram = GammaGram(n);
  if (gram.rows() > 0)
  {
    const auto eig = linalg::EigHermitian(gram);
    if (!(eig.values(0) > kKernelTol * eig.values(eig.values.size() - 1)))
    {
      throw InvariantViolation("Split: gamma_N is not positive definite");
    }
  }
  return {std::move(s), std::move(n), std::move(gram)};
}

DeficiencyData DeficiencySpace(const OperatorWithDomain &s, const OperatorWithDomain &t)
{
  if (Classify(s) != Classification::kSymmetric)
  {
    throw ValidationError("DeficiencySpace: S is not symmetric");
  }
  const auto &space = s.Space();
  const Index n = space.Dim();
  const LinearRelation s_adj = KreinAdjoint(s);
  const LinearRelation j_s_adj = ApplyLeft(space.J(), s_adj);

  DeficiencyData out{Eigenspace(j_s_adj, kI), Subspace::Zero(n), Subspace::Zero(n), Matrix()};
  const Matrix shifted = space.J() * t.Mat() + kI * Matrix::Identity(n, n);
  out.range = Image(shifted, t.Domain());
  out.target = Intersect(out.n_i, out.range);
  // J^2 = I makes [., J .] the Euclidean product, so P_i is the usual projector.
  out.p_i = out.target.Projector();
  return out;
}

Subspace DnViaResolvent(const OperatorWithDomain &t, const DeficiencyData &defi)
{
  const Index n = t.Dim();
  const Matrix &q = t.Domain().Basis();
  const Matrix shifted = (t.Space().J() * t.Mat() + kI * Matrix::Identity(n, n)) * q;
  if (defi.target.IsZero())
  {
    return Subspace::Zero(n, t.Tol());
  }
  // ||(J T + i) x|| >= ||x|| on D_T when J T is Hilbert-dissipative.
  if (q.cols() > 0)
  {
    const RealVector sigma = linalg::SingularValues(shifted);
    if (sigma(sigma.size() - 1) < 0.5)
    {
      throw InvariantViolation("DnViaResolvent: J T + i I is not injective on D_T");
    }
  }
  const Matrix coords = linalg::Solve(shifted, defi.target.Basis());
  const Matrix residual = shifted * coords - defi.target.Basis();
  if (residual.norm() > kGapTol * std::sqrt(double(coords.cols())) * std::max(1.0, shifted.norm()))
  {
    throw InvariantViolation("DnViaResolvent: target is not inside ran(J T + i I)");
  }
  return Subspace::Span(q * coords, t.Tol());
}

Complex GammaNInner(const Splitting &split, const Vector &x, const Vector &y)
{
  if (!split.n.Domain().Contains(x) || !split.n.Domain().Contains(y))
  {
    throw ValidationError("GammaNInner: arguments must lie in D_N");
  }
  return GammaForm(split.n, x, y);
}

}  // namespace kreinlab
