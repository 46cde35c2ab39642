// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_SUBSPACE_HPP
#define KREINLAB_SUBSPACE_HPP

#include <vector>

#include "kreinlab/common.hpp"

namespace kreinlab
{

/// A linear subspace of C^n held by an orthonormal basis (columns of basis()).
/// The zero subspace has an empty basis. Values are immutable.
class Subspace
{
public:
  /// Span of the columns of `columns`, canonicalized by SVD.
  static Subspace Span(const Matrix &columns, double tol = kDefaultTol);
  static Subspace Zero(Index ambient_dim, double tol = kDefaultTol);
  static Subspace Full(Index ambient_dim, double tol = kDefaultTol);
  /// Wraps a basis that is already orthonormal (not re-checked).
  static Subspace FromOrthonormal(Matrix basis, double tol = kDefaultTol);

  Index AmbientDim() const { return basis_.rows(); }
  Index Dim() const { return basis_.cols(); }
  bool IsZero() const { return basis_.cols() == 0; }
  bool IsFull() const { return basis_.cols() == basis_.rows(); }
  const Matrix &Basis() const { return basis_; }
  double Tol() const { return tol_; }

  Matrix Projector() const { return basis_ * basis_.adjoint(); }
  Vector Project(const Vector &x) const { return basis_ * (basis_.adjoint() * x); }
  /// ||x - P x|| / ||x||, zero for x = 0.
  double RelativeDistance(const Vector &x) const;
  bool Contains(const Vector &x, double tol = kGapTol) const { return RelativeDistance(x) <= tol; }

private:
  Subspace(Matrix basis, double tol) : basis_(std::move(basis)), tol_(tol) {}

  Matrix basis_;
  double tol_;
};

/// Hermitian (possibly indefinite) matrix defining a sesquilinear form
/// <x, M y>. When flagged as a canonical symmetry it is also an involution.
class MetricMatrix
{
public:
  explicit MetricMatrix(const Matrix &m, double tol = kDefaultTol);
  static MetricMatrix CanonicalSymmetry(const Matrix &j, double tol = kDefaultTol);
  static MetricMatrix Identity(Index n);

  Index Dim() const { return matrix_.rows(); }
  const Matrix &Mat() const { return matrix_; }
  bool IsCanonicalSymmetry() const { return canonical_; }

private:
  Matrix matrix_;
  bool canonical_ = false;
};

/// A linear relation: a subspace of C^left (+) C^right of pairs (x, y).
class LinearRelation
{
public:
  LinearRelation(Index left_dim, Index right_dim, Subspace graph);

  /// Graph {(x, M x) : x in domain}.
  static LinearRelation FromOperator(const Matrix &m, const Subspace &domain);
  /// Span of the columns of the stacked matrix [top; bottom].
  static LinearRelation FromPairs(const Matrix &top, const Matrix &bottom, double tol = kDefaultTol);
  static LinearRelation FullRelation(Index left_dim, Index right_dim, double tol = kDefaultTol);

  Index LeftDim() const { return left_dim_; }
  Index RightDim() const { return right_dim_; }
  const Subspace &Graph() const { return graph_; }
  Index Dim() const { return graph_.Dim(); }
  auto Top() const { return graph_.Basis().topRows(left_dim_); }
  auto Bottom() const { return graph_.Basis().bottomRows(right_dim_); }

  Subspace Dom() const;
  Subspace Ran() const;
  Subspace Ker() const;
  Subspace Mul() const;
  bool IsOperator() const { return Mul().IsZero(); }

  /// Matrix of an operator relation on the orthonormal basis of Dom(): maps
  /// domain coordinates to values in C^right. Throws when multivalued.
  Matrix OperatorMatrix() const;

private:
  Index left_dim_;
  Index right_dim_;
  Subspace graph_;
};

/// Span of a list of vectors in C^ambient_dim.
Subspace OrthonormalSpan(const std::vector<Vector> &vectors, Index ambient_dim,
                         double tol = kDefaultTol);
Subspace Intersect(const Subspace &a, const Subspace &b);
Subspace Sum(const Subspace &a, const Subspace &b);
/// Euclidean orthogonal complement.
Subspace OrthoComplement(const Subspace &a);
/// Metric-orthogonal companion {y : <a, M y> = 0 for all a in A}.
Subspace OrthoComplement(const Subspace &a, const MetricMatrix &metric);
/// Operator norm of P_A - P_B.
double GapDistance(const Subspace &a, const Subspace &b);
/// The image {M x : x in A}.
Subspace Image(const Matrix &m, const Subspace &a);

LinearRelation RelationInverse(const LinearRelation &r);

/// Adjoint relation {(y, x) : [v, y]_right = [u, x]_left for all (u, v) in R}.
/// For square relations with one canonical symmetry this is the J-adjoint;
/// with identity metrics it is the Hilbert adjoint.
LinearRelation RelationAdjoint(const LinearRelation &r, const MetricMatrix &metric_left,
                               const MetricMatrix &metric_right);

/// {x : (x, lambda x) in R}.
Subspace Eigenspace(const LinearRelation &r, Complex lambda);

/// {(x, P y) : (x, y) in R}, P the orthoprojection killing Mul(R).
LinearRelation OperatorPart(const LinearRelation &r);

/// {(x, L y) : (x, y) in R}.
LinearRelation ApplyLeft(const Matrix &l, const LinearRelation &r);

/// Difference of relations restricted to a lineal:
/// {(x, y1 - y2) : (x, y1) in R1, (x, y2) in R2, x in X}.
LinearRelation RelationDifference(const LinearRelation &r1, const LinearRelation &r2,
                                  const Subspace &restrict_to);

}  // namespace kreinlab

#endif  // KREINLAB_SUBSPACE_HPP
