// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_COMPLETENESS_HPP
#define KREINLAB_COMPLETENESS_HPP

#include <cstdint>
#include <optional>

#include "kreinlab/boundary.hpp"

namespace kreinlab
{

/// T = S1 (+) N1 with S1 = ker Gamma_1, plus the relation
/// Theta_01 = (Gamma_0|N1)(Gamma_1|N1)^{-1} in the boundary space.
/// The relations are absent when the boundary space is trivial.
struct ThetaData
{
  OperatorWithDomain s1;
  OperatorWithDomain n1;
  std::optional<LinearRelation> theta;
  std::optional<LinearRelation> theta_adjoint;
};

/// S1 and N1 only; Theta is filled by Theta01().
ThetaData SplitS1N1(const RestrictedBoundary &rb, const OperatorWithDomain &t);
/// Adds Theta_01 and its Hilbert adjoint.
ThetaData Theta01(ThetaData data, const BoundaryTriple &triple);

/// Gamma_0 applied to the domain of S1 (a subspace of the boundary space).
Subspace Gamma0OfS1(const ThetaData &data, const BoundaryTriple &triple);

struct ConditionA
{
  bool ok = true;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

struct ConditionB
{
  bool ok = true;
  double norm = 0.0;
};

struct ConditionC
{
  bool ok = true;
  double gap_range_sum = 0.0;   // R_{G1} + (G0(S1))^perp versus H'
  double gap_theta_sum = 0.0;   // (Theta^* - Theta)((G0 S1)^perp) + G0(S1) versus H'
};

/// Uniform positivity of L_T: smallest Gram eigenvalue > 1e-10 * largest.
ConditionA ConditionAFromLt(const LTSpace &lt);

/// Norm of (G1 - i G0)(G1 + i G0)^{-1} on the graph of N; gamma0_n and
/// gamma1_n are the boundary maps on a basis of D_N.
ConditionB ConditionBFromMaps(const Matrix &gamma0_n, const Matrix &gamma1_n);

ConditionC ConditionCFromTheta(const ThetaData &data, const BoundaryTriple &triple);

/// Angular operator of L_T with respect to the fundamental decomposition of
/// the boundary graph space: K (u, i u) = (2 i v - u, i u + 2 v) with
/// u = (G1 + i G0) x and v = G0 x. The image lies in {(w, -i w)}, so K is
/// stored as the m x m matrix u -> w.
struct AngularOperator
{
  Matrix u;  // columns (G1 + i G0) x_k over a basis x_k of D_N
  Matrix v;  // columns G0 x_k
  Matrix k;
  double norm = 0.0;
};
AngularOperator Angular(const Matrix &gamma0_n, const Matrix &gamma1_n);

struct CriterionReport
{
  ConditionA a;
  ConditionB b;
  ConditionC c;
  bool agree = true;
  Index boundary_dim = 0;
  Index lt_dim = 0;
};

/// Runs the pipeline (split, boundary triple, restriction, Theta calculus)
/// and evaluates all three conditions.
CriterionReport CriterionReportFor(const OperatorWithDomain &t, std::uint64_t seed = 0);

/// Evaluates the conditions from already built pieces.
CriterionReport EvaluateCriterion(const OperatorWithDomain &t, const Splitting &split,
                                  const BoundaryTriple &triple, const RestrictedBoundary &rb);

}  // namespace kreinlab

#endif  // KREINLAB_COMPLETENESS_HPP
