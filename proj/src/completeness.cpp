// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/completeness.hpp"

#include <algorithm>

#include "kreinlab/linalg.hpp"

namespace kreinlab
{

namespace
{

// Gamma_s (x, T x) for the columns x of an orthonormal domain basis.
Matrix BoundaryValues(const BoundaryTriple &triple, const OperatorWithDomain &op)
{
  Matrix pts(2 * op.Dim(), op.DomainDim());
  pts << op.Domain().Basis(), op.ImageOfBasis();
  return triple.gamma_s * pts;
}

// Column span with an absolute cutoff tied to the size of the boundary map,
// so that a numerically zero block does not acquire a spurious rank.
Subspace SpanScaled(const Matrix &cols, double scale)
{
  return Subspace::FromOrthonormal(linalg::ColumnSpan(cols, kDefaultTol, scale));
}

double BoundaryScale(const BoundaryTriple &triple)
{
  return std::max(1.0, linalg::SpectralNorm(triple.gamma_s));
}

}  // namespace

ThetaData SplitS1N1(const RestrictedBoundary &rb, const OperatorWithDomain &t)
{
  const Matrix &q = t.Domain().Basis();
  const double scale = std::max({1.0, linalg::SpectralNorm(rb.gamma0), linalg::SpectralNorm(rb.gamma1)});
  const Matrix ks = rb.gamma1.rows() > 0 ? linalg::NullSpace(rb.gamma1, kDefaultTol, scale)
                                         : Matrix(Matrix::Identity(q.cols(), q.cols()));
  const Matrix kn = linalg::NullSpace(ks.adjoint() * GraphGram(t), t.Tol());
  return {t.Restrict(Subspace::Span(q * ks, t.Tol())), t.Restrict(Subspace::Span(q * kn, t.Tol())),
          std::nullopt, std::nullopt};
}

ThetaData Theta01(ThetaData data, const BoundaryTriple &triple)
{
  const Index m = triple.boundary_dim;
  if (m == 0)
  {
    return data;
  }
  const Matrix values = BoundaryValues(triple, data.n1);
  data.theta = LinearRelation::FromPairs(values.bottomRows(m), values.topRows(m));
  data.theta_adjoint =
      RelationAdjoint(*data.theta, MetricMatrix::Identity(m), MetricMatrix::Identity(m));
  return data;
}

Subspace Gamma0OfS1(const ThetaData &data, const BoundaryTriple &triple)
{
  const Index m = triple.boundary_dim;
  if (m == 0)
  {
    throw ValidationError("Gamma0OfS1: boundary space is trivial");
  }
  return SpanScaled(BoundaryValues(triple, data.s1).topRows(m), BoundaryScale(triple));
}

ConditionA ConditionAFromLt(const LTSpace &lt)
{
  ConditionA out;
  if (lt.Dim() == 0)
  {
    return out;
  }
  const auto eig = linalg::EigHermitian(lt.gram);
  out.min_eigenvalue = eig.values(0);
  out.max_eigenvalue = eig.values(eig.values.size() - 1);
  out.ok = out.max_eigenvalue > 0.0 && out.min_eigenvalue > kDefaultTol * out.max_eigenvalue;
  return out;
}

ConditionB ConditionBFromMaps(const Matrix &gamma0_n, const Matrix &gamma1_n)
{
  Require(gamma0_n.rows() == gamma1_n.rows() && gamma0_n.cols() == gamma1_n.cols(),
          "ConditionB: boundary maps have different shapes");
  ConditionB out;
  if (gamma0_n.cols() == 0 || gamma0_n.rows() == 0)
  {
    return out;
  }
  const Matrix plus = gamma1_n + kI * gamma0_n;
  const Matrix minus = gamma1_n - kI * gamma0_n;
  const RealVector sigma = linalg::SingularValues(plus);
  if (plus.cols() > plus.rows() || sigma(plus.cols() - 1) <= kKernelTol * std::max(1.0, sigma(0)))
  {
    throw InvariantViolation("ConditionB: G1 + i G0 is not injective on the graph of N");
  }
  out.norm = linalg::SpectralNorm(minus * linalg::Solve(plus, Matrix::Identity(plus.rows(), plus.rows())));
  out.ok = out.norm < 1.0 - kDefaultTol;
  return out;
}

ConditionC ConditionCFromTheta(const ThetaData &data, const BoundaryTriple &triple)
{
  ConditionC out;
  const Index m = triple.boundary_dim;
  if (m == 0)
  {
    return out;
  }
  if (!data.theta || !data.theta_adjoint)
  {
    throw ValidationError("ConditionC: Theta_01 has not been computed");
  }
  const double scale = BoundaryScale(triple);
  const Subspace full = Subspace::Full(m);
  const Subspace g0s1 = Gamma0OfS1(data, triple);
  const Subspace g0s1_perp = OrthoComplement(g0s1);
  // Dom Theta = ran Gamma_1 on D_T, since Gamma_1 vanishes on D_{S1}.
  const Subspace ran_g1 = SpanScaled(BoundaryValues(triple, data.n1).bottomRows(m), scale);
  out.gap_range_sum = GapDistance(Sum(ran_g1, g0s1_perp), full);

  const Subspace lineal =
      Intersect(Intersect(ran_g1, data.theta_adjoint->Dom()), g0s1_perp);
  const LinearRelation diff = RelationDifference(*data.theta_adjoint, *data.theta, lineal);
  out.gap_theta_sum = GapDistance(Sum(diff.Ran(), g0s1), full);
  out.ok = out.gap_range_sum <= kGapTol && out.gap_theta_sum <= kGapTol;
  return out;
}

AngularOperator Angular(const Matrix &gamma0_n, const Matrix &gamma1_n)
{
  AngularOperator out;
  out.u = gamma1_n + kI * gamma0_n;
  out.v = gamma0_n;
  const Index m = gamma0_n.rows();
  if (gamma0_n.cols() == 0)
  {
    out.k = Matrix::Zero(m, m);
    return out;
  }
  // w = 2 i v - u on each column, extended by zero off ran u.
  const Matrix w = 2.0 * kI * out.v - out.u;
  out.k = w * linalg::Solve(out.u, Matrix::Identity(m, m));
  out.norm = linalg::SpectralNorm(out.k);
  return out;
}

CriterionReport EvaluateCriterion(const OperatorWithDomain &t, const Splitting &split,
                                  const BoundaryTriple &triple, const RestrictedBoundary &rb)
{
  CriterionReport out;
  out.boundary_dim = triple.boundary_dim;
  out.lt_dim = rb.lt.Dim();
  out.a = ConditionAFromLt(rb.lt);

  const Index m = triple.boundary_dim;
  const Matrix values = BoundaryValues(triple, split.n);
  out.b = ConditionBFromMaps(values.topRows(m), values.bottomRows(m));

  const ThetaData data = Theta01(SplitS1N1(rb, t), triple);
  out.c = ConditionCFromTheta(data, triple);
  out.agree = out.a.ok == out.b.ok && out.b.ok == out.c.ok;
  return out;
}

CriterionReport CriterionReportFor(const OperatorWithDomain &t, std::uint64_t seed)
{
  const Splitting split = Split(t);
  const BoundaryTriple triple = ConstructObt(split.s, seed);
  const RestrictedBoundary rb = RestrictToT(triple, t);
  return EvaluateCriterion(t, split, triple, rb);
}

}  // namespace kreinlab
