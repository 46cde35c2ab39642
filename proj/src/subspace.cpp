// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kreinlab/linalg.hpp"

namespace kreinlab
{

namespace
{

void CheckAmbient(const Subspace &a, const Subspace &b, const char *what)
{
  Require(a.AmbientDim() == b.AmbientDim(),
          std::string(what) + ": ambient dimensions differ (" + std::to_string(a.AmbientDim()) +
              " vs " + std::to_string(b.AmbientDim()) + ")");
}

}  // namespace

Subspace Subspace::Span(const Matrix &columns, double tol)
{
  if (columns.rows() == 0)
  {
    throw ValidationError("Subspace: ambient dimension must be positive");
  }
  return Subspace(linalg::ColumnSpan(columns, tol), tol);
}

Subspace Subspace::Zero(Index ambient_dim, double tol)
{
  if (ambient_dim <= 0)
  {
    throw ValidationError("Subspace: ambient dimension must be positive");
  }
  return Subspace(Matrix(ambient_dim, 0), tol);
}

Subspace Subspace::Full(Index ambient_dim, double tol)
{
  if (ambient_dim <= 0)
  {
    throw ValidationError("Subspace: ambient dimension must be positive");
  }
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim), tol);
}

Subspace Subspace::FromOrthonormal(Matrix basis, double tol)
{
  if (basis.rows() == 0)
  {
    throw ValidationError("Subspace: ambient dimension must be positive");
  }
  return Subspace(std::move(basis), tol);
}

double Subspace::RelativeDistance(const Vector &x) const
{
  Require(x.size() == AmbientDim(), "Subspace::RelativeDistance: dimension mismatch");
  const double nx = x.norm();
  if (nx == 0.0)
  {
    return 0.0;
  }
  return (x - Project(x)).norm() / nx;
}

MetricMatrix::MetricMatrix(const Matrix &m, double tol)
{
  if (m.rows() == 0 || m.rows() != m.cols())
  {
    throw ValidationError("MetricMatrix: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > tol * scale)
  {
    throw ValidationError("MetricMatrix: matrix is not Hermitian");
  }
  matrix_ = linalg::Hermitian(m);
}

MetricMatrix MetricMatrix::CanonicalSymmetry(const Matrix &j, double tol)
{
  MetricMatrix out(j, tol);
  const Index n = out.Dim();
  if ((out.matrix_ * out.matrix_ - Matrix::Identity(n, n)).norm() > tol * std::sqrt(double(n)))
  {
    throw ValidationError("MetricMatrix: canonical symmetry must be an involution (J^2 = I)");
  }
  out.canonical_ = true;
  return out;
}

MetricMatrix MetricMatrix::Identity(Index n)
{
  return CanonicalSymmetry(Matrix::Identity(n, n));
}

LinearRelation::LinearRelation(Index left_dim, Index right_dim, Subspace graph)
  : left_dim_(left_dim), right_dim_(right_dim), graph_(std::move(graph))
{
  if (left_dim <= 0 || right_dim <= 0)
  {
    throw ValidationError("LinearRelation: dimensions must be positive");
  }
  Require(graph_.AmbientDim() == left_dim + right_dim,
          "LinearRelation: graph lives in the wrong product space");
}

LinearRelation LinearRelation::FromOperator(const Matrix &m, const Subspace &domain)
{
  Require(m.cols() == domain.AmbientDim(), "LinearRelation::FromOperator: matrix/domain mismatch");
  const Matrix &q = domain.Basis();
  Matrix stacked(m.cols() + m.rows(), q.cols());
  stacked << q, m * q;
  return {m.cols(), m.rows(), Subspace::Span(stacked, domain.Tol())};
}

LinearRelation LinearRelation::FromPairs(const Matrix &top, const Matrix &bottom, double tol)
{
  Require(top.cols() == bottom.cols(), "LinearRelation::FromPairs: column counts differ");
  Matrix stacked(top.rows() + bottom.rows(), top.cols());
  stacked << top, bottom;
  return {top.rows(), bottom.rows(), Subspace::Span(stacked, tol)};
}

LinearRelation LinearRelation::FullRelation(Index left_dim, Index right_dim, double tol)
{
  return {left_dim, right_dim, Subspace::Full(left_dim + right_dim, tol)};
}

// The graph basis is orthonormal, so blocks of it are measured against 1
// rather than their own largest singular value.
Subspace LinearRelation::Dom() const
{
  return Subspace::FromOrthonormal(linalg::ColumnSpan(Top(), graph_.Tol(), 1.0), graph_.Tol());
}

Subspace LinearRelation::Ran() const
{
  return Subspace::FromOrthonormal(linalg::ColumnSpan(Bottom(), graph_.Tol(), 1.0), graph_.Tol());
}

Subspace LinearRelation::Ker() const
{
  const Matrix c = linalg::NullSpace(Bottom(), graph_.Tol(), 1.0);
  return Subspace::FromOrthonormal(linalg::ColumnSpan(Top() * c, graph_.Tol(), 1.0), graph_.Tol());
}

Subspace LinearRelation::Mul() const
{
  const Matrix c = linalg::NullSpace(Top(), graph_.Tol(), 1.0);
  return Subspace::FromOrthonormal(linalg::ColumnSpan(Bottom() * c, graph_.Tol(), 1.0),
                                   graph_.Tol());
}

Matrix LinearRelation::OperatorMatrix() const
{
  if (!IsOperator())
  {
    throw ValidationError("LinearRelation::OperatorMatrix: relation is multivalued");
  }
  const Subspace dom = Dom();
  // Top * c = dom basis  =>  values Bottom * c.
  const Matrix c = linalg::Solve(Top(), dom.Basis());
  return Bottom() * c;
}

Subspace OrthonormalSpan(const std::vector<Vector> &vectors, Index ambient_dim, double tol)
{
  Matrix cols(ambient_dim, Index(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k)
  {
    Require(vectors[k].size() == ambient_dim,
            "OrthonormalSpan: vector " + std::to_string(k) + " has dimension " +
                std::to_string(vectors[k].size()) + ", expected " + std::to_string(ambient_dim));
    cols.col(Index(k)) = vectors[k];
  }
  return Subspace::Span(cols, tol);
}

Subspace Intersect(const Subspace &a, const Subspace &b)
{
  CheckAmbient(a, b, "Intersect");
  const double tol = std::max(a.Tol(), b.Tol());
  if (a.IsZero() || b.IsZero())
  {
    return Subspace::Zero(a.AmbientDim(), tol);
  }
  Matrix pair(a.AmbientDim(), a.Dim() + b.Dim());
  pair << a.Basis(), -b.Basis();
  const Matrix c = linalg::NullSpace(pair, tol);
  return Subspace::Span(a.Basis() * c.topRows(a.Dim()), tol);
}

Subspace Sum(const Subspace &a, const Subspace &b)
{
  CheckAmbient(a, b, "Sum");
  Matrix both(a.AmbientDim(), a.Dim() + b.Dim());
  both << a.Basis(), b.Basis();
  return Subspace::Span(both, std::max(a.Tol(), b.Tol()));
}

Subspace OrthoComplement(const Subspace &a)
{
  return Subspace::FromOrthonormal(linalg::NullSpace(a.Basis().adjoint(), a.Tol()), a.Tol());
}

Subspace OrthoComplement(const Subspace &a, const MetricMatrix &metric)
{
  Require(metric.Dim() == a.AmbientDim(), "OrthoComplement: metric dimension mismatch");
  return Subspace::FromOrthonormal(
      linalg::NullSpace(a.Basis().adjoint() * metric.Mat(), a.Tol()), a.Tol());
}

double GapDistance(const Subspace &a, const Subspace &b)
{
  CheckAmbient(a, b, "GapDistance");
  if (a.Dim() != b.Dim())
  {
    return 1.0;
  }
  if (a.IsZero())
  {
    return 0.0;
  }
  const Matrix &qa = a.Basis();
  const Matrix &qb = b.Basis();
  const double d1 = linalg::SpectralNorm(qa - qb * (qb.adjoint() * qa));
  const double d2 = linalg::SpectralNorm(qb - qa * (qa.adjoint() * qb));
  return std::min(1.0, std::max(d1, d2));
}

Subspace Image(const Matrix &m, const Subspace &a)
{
  Require(m.cols() == a.AmbientDim(), "Image: dimension mismatch");
  if (a.IsZero())
  {
    return Subspace::Zero(m.rows(), a.Tol());
  }
  return Subspace::Span(m * a.Basis(), a.Tol());
}

LinearRelation RelationInverse(const LinearRelation &r)
{
  Matrix swapped(r.LeftDim() + r.RightDim(), r.Dim());
  swapped << r.Bottom(), r.Top();
  return {r.RightDim(), r.LeftDim(), Subspace::FromOrthonormal(swapped, r.Graph().Tol())};
}

LinearRelation RelationAdjoint(const LinearRelation &r, const MetricMatrix &metric_left,
                               const MetricMatrix &metric_right)
{
  if (!metric_left.IsCanonicalSymmetry() || !metric_right.IsCanonicalSymmetry())
  {
    throw ValidationError("RelationAdjoint: metrics must be Hermitian involutions");
  }
  Require(metric_left.Dim() == r.LeftDim() && metric_right.Dim() == r.RightDim(),
          "RelationAdjoint: metric dimension mismatch");
  // Rows encode [v, y]_right - [u, x]_left = 0 for each basis pair (u, v).
  Matrix system(r.Dim(), r.RightDim() + r.LeftDim());
  system << r.Bottom().adjoint() * metric_right.Mat(), -(r.Top().adjoint() * metric_left.Mat());
  const double tol = r.Graph().Tol();
  return {r.RightDim(), r.LeftDim(),
          Subspace::FromOrthonormal(linalg::NullSpace(system, tol), tol)};
}

Subspace Eigenspace(const LinearRelation &r, Complex lambda)
{
  Require(r.LeftDim() == r.RightDim(), "Eigenspace: relation must be square");
  const double tol = r.Graph().Tol();
  const Matrix c = linalg::NullSpace(r.Bottom() - lambda * r.Top(), tol, 1.0 + std::abs(lambda));
  return Subspace::FromOrthonormal(linalg::ColumnSpan(r.Top() * c, tol, 1.0), tol);
}

LinearRelation OperatorPart(const LinearRelation &r)
{
  const Subspace mul = r.Mul();
  const Matrix values = r.Bottom() - mul.Basis() * (mul.Basis().adjoint() * r.Bottom());
  return LinearRelation::FromPairs(r.Top(), values, r.Graph().Tol());
}

LinearRelation ApplyLeft(const Matrix &l, const LinearRelation &r)
{
  Require(l.cols() == r.RightDim(), "ApplyLeft: dimension mismatch");
  return LinearRelation::FromPairs(r.Top(), l * r.Bottom(), r.Graph().Tol());
}

LinearRelation RelationDifference(const LinearRelation &r1, const LinearRelation &r2,
                                  const Subspace &restrict_to)
{
  Require(r1.LeftDim() == r2.LeftDim() && r1.RightDim() == r2.RightDim(),
          "RelationDifference: relations live in different spaces");
  Require(restrict_to.AmbientDim() == r1.LeftDim(), "RelationDifference: lineal dimension mismatch");
  const double tol = std::max(r1.Graph().Tol(), r2.Graph().Tol());
  const Index n = r1.LeftDim();
  const Subspace outside = OrthoComplement(restrict_to);
  // Unknowns (c1, c2): Top1 c1 = Top2 c2 and Top1 c1 orthogonal to X^perp.
  Matrix system(n + outside.Dim(), r1.Dim() + r2.Dim());
  system.topRows(n) << r1.Top(), -r2.Top();
  system.bottomRows(outside.Dim()) << outside.Basis().adjoint() * r1.Top(),
      Matrix::Zero(outside.Dim(), r2.Dim());
  const Matrix c = linalg::NullSpace(system, tol);
  const Matrix c1 = c.topRows(r1.Dim());
  const Matrix c2 = c.bottomRows(r2.Dim());
  return LinearRelation::FromPairs(r1.Top() * c1, r1.Bottom() * c1 - r2.Bottom() * c2, tol);
}

}  // namespace kreinlab
