// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_KREIN_HPP
#define KREINLAB_KREIN_HPP

#include <string_view>

#include "kreinlab/subspace.hpp"

namespace kreinlab
{

/// C^n with the indefinite inner product [x, y] = <x, J y>.
class KreinSpace
{
public:
  explicit KreinSpace(const Matrix &j, double tol = kDefaultTol)
    : j_(MetricMatrix::CanonicalSymmetry(j, tol))
  {
  }
  static KreinSpace Hilbert(Index n) { return KreinSpace(Matrix::Identity(n, n)); }

  Index Dim() const { return j_.Dim(); }
  const Matrix &J() const { return j_.Mat(); }
  const MetricMatrix &Metric() const { return j_; }

private:
  MetricMatrix j_;
};

/// The space of pairs C^n (+) C^n with
/// [(x1, y1), (x2, y2)]_G = -i([x1, y2] - [y1, x2]).
class GraphKreinSpace
{
public:
  explicit GraphKreinSpace(KreinSpace base) : base_(std::move(base)) {}

  const KreinSpace &Base() const { return base_; }
  Index Dim() const { return 2 * base_.Dim(); }
  /// Matrix G with [p, q]_G = p^* G q.
  Matrix Metric() const;
  /// J_G (x, y) = (-i J y, i J x).
  Matrix CanonicalSymmetry() const;

private:
  KreinSpace base_;
};

/// A square matrix acting on a domain subspace of a Krein space.
class OperatorWithDomain
{
public:
  OperatorWithDomain(KreinSpace space, Matrix matrix, Subspace domain);
  /// Operator defined on the whole space.
  OperatorWithDomain(KreinSpace space, Matrix matrix);

  const KreinSpace &Space() const { return space_; }
  const Matrix &Mat() const { return matrix_; }
  const Subspace &Domain() const { return domain_; }
  Index Dim() const { return matrix_.rows(); }
  Index DomainDim() const { return domain_.Dim(); }
  double Tol() const { return domain_.Tol(); }

  /// Columns M q_k for the domain basis q_k.
  Matrix ImageOfBasis() const { return matrix_ * domain_.Basis(); }
  /// T x; throws ValidationError if x is not in the domain.
  Vector Apply(const Vector &x) const;
  LinearRelation Graph() const { return LinearRelation::FromOperator(matrix_, domain_); }
  /// Same matrix on a smaller domain.
  OperatorWithDomain Restrict(const Subspace &sub) const;

private:
  KreinSpace space_;
  Matrix matrix_;
  Subspace domain_;
};

Complex IndefiniteInner(const KreinSpace &k, const Vector &x, const Vector &y);
Complex GraphMetric(const GraphKreinSpace &g, const Vector &p1, const Vector &p2);

/// -i (J M - M^* J) on the ambient space.
Matrix GammaGramAmbient(const OperatorWithDomain &t);
/// Matrix of gamma_T on the orthonormal domain basis: gamma_T[x, y] = a^* G b.
Matrix GammaGram(const OperatorWithDomain &t);
/// gamma_T[x, y] = -i([x, T y] - [T x, y]) evaluated directly.
Complex GammaForm(const OperatorWithDomain &t, const Vector &x, const Vector &y);

enum class Classification
{
  kDissipative,
  kSymmetric,
  kNeither
};
std::string_view ToString(Classification c);

/// Classification from the spectrum of GammaGram.
Classification Classify(const OperatorWithDomain &t);
/// Classification from the sign of the graph in [.,.]_G.
Classification ClassifyViaGraph(const OperatorWithDomain &t);

/// J-adjoint T^c as the [.,.]_G-orthogonal companion of the graph.
LinearRelation KreinAdjoint(const OperatorWithDomain &t);

/// <x, y>_T = <x, y> + <T x, T y>.
Complex GraphInner(const OperatorWithDomain &t, const Vector &x, const Vector &y);
double GraphNorm(const OperatorWithDomain &t, const Vector &x);
/// Gram matrix of <.,.>_T on the orthonormal domain basis.
Matrix GraphGram(const OperatorWithDomain &t);

/// Riesz operator of gamma_T on the graph-norm space H_T.
///
/// `basis` holds domain vectors that are orthonormal for <.,.>_T; F and its
/// principal square root act on coordinates in that basis, so F is an
/// ordinary Hermitian matrix with gamma_T[x, y] = <x, F y>_T.
struct RieszOperator
{
  Matrix basis;
  Matrix f;
  Matrix sqrt_f;

  /// Coordinates of a domain vector in `basis`.
  Vector Coordinates(const Vector &x) const;
};

RieszOperator RieszF(const OperatorWithDomain &t);

/// Completion inner product on ran sqrt(F): (sqrt(F) a, sqrt(F) b)~ = <a, P_F b>_T
/// where P_F projects onto the closure of ran sqrt(F). Returns the matrix of
/// P_F in the orthonormal coordinates of `r.basis`.
Matrix RangeProjector(const RieszOperator &r);

}  // namespace kreinlab

#endif  // KREINLAB_KREIN_HPP
