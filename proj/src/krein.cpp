// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/krein.hpp"

#include <algorithm>
#include <cmath>

#include "kreinlab/linalg.hpp"

namespace kreinlab
{

Matrix GraphKreinSpace::Metric() const
{
  const Index n = base_.Dim();
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  g.topRightCorner(n, n) = -kI * base_.J();
  g.bottomLeftCorner(n, n) = kI * base_.J();
  return g;
}

Matrix GraphKreinSpace::CanonicalSymmetry() const
{
  // Same block pattern as the metric: (x, y) -> (-i J y, i J x).
  return Metric();
}

OperatorWithDomain::OperatorWithDomain(KreinSpace space, Matrix matrix, Subspace domain)
  : space_(std::move(space)), matrix_(std::move(matrix)), domain_(std::move(domain))
{
  if (matrix_.rows() != matrix_.cols())
  {
    throw ValidationError("OperatorWithDomain: matrix must be square");
  }
  Require(matrix_.rows() == space_.Dim(), "OperatorWithDomain: matrix does not match space");
  Require(domain_.AmbientDim() == space_.Dim(), "OperatorWithDomain: domain does not match space");
}

OperatorWithDomain::OperatorWithDomain(KreinSpace space, Matrix matrix)
  : OperatorWithDomain(space, matrix, Subspace::Full(space.Dim()))
{
}

Vector OperatorWithDomain::Apply(const Vector &x) const
{
  if (!domain_.Contains(x))
  {
    throw ValidationError("OperatorWithDomain::Apply: vector is not in the domain");
  }
  return matrix_ * x;
}

OperatorWithDomain OperatorWithDomain::Restrict(const Subspace &sub) const
{
  return {space_, matrix_, sub};
}

Complex IndefiniteInner(const KreinSpace &k, const Vector &x, const Vector &y)
{
  Require(x.size() == k.Dim() && y.size() == k.Dim(), "IndefiniteInner: dimension mismatch");
  return x.dot(k.J() * y);
}

Complex GraphMetric(const GraphKreinSpace &g, const Vector &p1, const Vector &p2)
{
  const Index n = g.Base().Dim();
  Require(p1.size() == 2 * n && p2.size() == 2 * n, "GraphMetric: dimension mismatch");
  const auto &k = g.Base();
  return -kI * (IndefiniteInner(k, p1.head(n), p2.tail(n)) - IndefiniteInner(k, p1.tail(n), p2.head(n)));
}

Matrix GammaGramAmbient(const OperatorWithDomain &t)
{
  const Matrix &j = t.Space().J();
  const Matrix &m = t.Mat();
  return linalg::Hermitian(-kI * (j * m - m.adjoint() * j));
}

Matrix GammaGram(const OperatorWithDomain &t)
{
  const Matrix &q = t.Domain().Basis();
  return linalg::Hermitian(q.adjoint() * GammaGramAmbient(t) * q);
}

Complex GammaForm(const OperatorWithDomain &t, const Vector &x, const Vector &y)
{
  const auto &k = t.Space();
  return -kI * (IndefiniteInner(k, x, t.Mat() * y) - IndefiniteInner(k, t.Mat() * x, y));
}

std::string_view ToString(Classification c)
{
  switch (c)
  {
    case Classification::kDissipative:
      return "dissipative";
    case Classification::kSymmetric:
      return "symmetric";
    case Classification::kNeither:
      return "neither";
  }
  return "neither";
}

namespace
{

// Shared decision rule for a Hermitian form matrix h whose natural scale is
// `scale`: zero within tol -> symmetric; spectrum >= -tol ||h|| -> dissipative.
Classification ClassifyForm(const Matrix &h, double scale, double tol)
{
  if (h.rows() == 0)
  {
    return Classification::kSymmetric;
  }
  const auto eig = linalg::EigHermitian(h);
  const double norm = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
  if (norm <= tol * scale)
  {
    return Classification::kSymmetric;
  }
  return eig.values(0) >= -tol * norm ? Classification::kDissipative : Classification::kNeither;
}

}  // namespace

Classification Classify(const OperatorWithDomain &t)
{
  const Matrix g = GammaGram(t);
  const double scale = std::max(1.0, linalg::SpectralNorm(t.ImageOfBasis()));
  return ClassifyForm(g, scale, t.Tol());
}

Classification ClassifyViaGraph(const OperatorWithDomain &t)
{
  const GraphKreinSpace g(t.Space());
  const Matrix basis = t.Graph().Graph().Basis();
  // The graph basis is Euclidean-orthonormal, so the form is already normalized.
  return ClassifyForm(linalg::Hermitian(basis.adjoint() * g.Metric() * basis), 1.0, t.Tol());
}

LinearRelation KreinAdjoint(const OperatorWithDomain &t)
{
  const auto &metric = t.Space().Metric();
  return RelationAdjoint(t.Graph(), metric, metric);
}

Complex GraphInner(const OperatorWithDomain &t, const Vector &x, const Vector &y)
{
  const Vector tx = t.Apply(x);
  const Vector ty = t.Apply(y);
  // <x, y> = [x, J y] is Euclidean because J^2 = I.
  return IndefiniteInner(t.Space(), x, t.Space().J() * y) +
         IndefiniteInner(t.Space(), tx, t.Space().J() * ty);
}

double GraphNorm(const OperatorWithDomain &t, const Vector &x)
{
  return std::sqrt(std::max(0.0, GraphInner(t, x, x).real()));
}

Matrix GraphGram(const OperatorWithDomain &t)
{
  const Matrix &q = t.Domain().Basis();
  const Matrix mq = t.ImageOfBasis();
  return linalg::Hermitian(q.adjoint() * q + mq.adjoint() * mq);
}

Vector RieszOperator::Coordinates(const Vector &x) const
{
  return linalg::Solve(basis, x);
}

RieszOperator RieszF(const OperatorWithDomain &t)
{
  if (Classify(t) == Classification::kNeither)
  {
    throw NotDissipative("RieszF: operator is not dissipative");
  }
  const Matrix w = linalg::InvSqrtPd(GraphGram(t));
  RieszOperator out;
  out.basis = t.Domain().Basis() * w;
  out.f = linalg::Hermitian(w.adjoint() * GammaGram(t) * w);
  // Same cutoff as RangeProjector so ker sqrt(F) and ran sqrt(F) match it.
  out.sqrt_f = linalg::SqrtPsd(out.f, kKernelTol);
  return out;
}

Matrix RangeProjector(const RieszOperator &r)
{
  const Index d = r.f.rows();
  if (d == 0)
  {
    return Matrix(0, 0);
  }
  const auto eig = linalg::EigHermitian(r.f);
  const double top = std::max(0.0, eig.values(d - 1));
  Matrix p = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k)
  {
    if (top > 0.0 && eig.values(k) > kKernelTol * top)
    {
      p += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
    }
  }
  return p;
}

}  // namespace kreinlab
