// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "kreinlab/random.hpp"
#include "kreinlab/subspace.hpp"
#include "oracles.hpp"

using namespace kreinlab;
using oracle::Unit;

namespace
{

Vector V2(Complex a, Complex b)
{
  Vector v(2);
  v << a, b;
  return v;
}

Matrix Cols(std::initializer_list<Vector> vs)
{
  const Index n = vs.begin()->size();
  Matrix m(n, Index(vs.size()));
  Index k = 0;
  for (const auto &v : vs)
  {
    m.col(k++) = v;
  }
  return m;
}

}  // namespace

TEST(OrthonormalSpan, CollinearVectorsGiveALine)
{
  const Subspace s = OrthonormalSpan({V2(1, 0), V2(2, 0)}, 2);
  EXPECT_EQ(s.Dim(), 1);
  EXPECT_LE(GapDistance(s, Subspace::Span(Unit(2, 0))), 1e-12);
}

TEST(OrthonormalSpan, EmptyListIsZero)
{
  const Subspace s = OrthonormalSpan({}, 3);
  EXPECT_TRUE(s.IsZero());
  EXPECT_EQ(s.AmbientDim(), 3);
}

TEST(OrthonormalSpan, IndependentPairIsFull)
{
  const Subspace s = OrthonormalSpan({V2(1, 1), V2(1, -1)}, 2);
  EXPECT_EQ(s.Dim(), 2);
  EXPECT_TRUE(s.IsFull());
}

TEST(OrthonormalSpan, RejectsMixedDimensions)
{
  EXPECT_THROW(OrthonormalSpan({V2(1, 0), Unit(3, 0)}, 2), DimensionMismatch);
}

TEST(Subspace, RejectsZeroAmbient)
{
  EXPECT_THROW(Subspace::Zero(0), ValidationError);
}

TEST(Intersect, Examples)
{
  const Subspace e1 = Subspace::Span(Unit(3, 0));
  const Subspace e2 = Subspace::Span(Unit(3, 1));
  EXPECT_LE(GapDistance(Intersect(e1, e1), e1), 1e-12);
  EXPECT_TRUE(Intersect(e1, e2).IsZero());

  const Vector e12 = Unit(3, 0) + Unit(3, 1);
  const Subspace a = Subspace::Span(Cols({e12, Unit(3, 2)}));
  const Subspace b = Subspace::Span(Cols({e12, Unit(3, 0)}));
  const Subspace c = Intersect(a, b);
  ASSERT_EQ(c.Dim(), 1);
  EXPECT_LE(oracle::ProjectorGap(c.Basis(), e12), 1e-12);
}

TEST(Intersect, AmbientMismatchThrows)
{
  EXPECT_THROW(Intersect(Subspace::Full(2), Subspace::Full(3)), DimensionMismatch);
}

TEST(Complement, Examples)
{
  const Subspace e1 = Subspace::Span(Unit(2, 0));
  EXPECT_LE(GapDistance(OrthoComplement(e1), Subspace::Span(Unit(2, 1))), 1e-12);

  // The neutral line e1 + e2 is its own diag(1, -1)-orthogonal companion.
  const Subspace neutral = Subspace::Span(V2(1, 1));
  const MetricMatrix j(oracle::Diag({1.0, -1.0}));
  EXPECT_LE(GapDistance(OrthoComplement(neutral, j), neutral), 1e-12);

  EXPECT_TRUE(Sum(e1, Subspace::Span(Unit(2, 1))).IsFull());
}

TEST(Complement, NonHermitianMetricThrows)
{
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(MetricMatrix{m}, ValidationError);
}

TEST(GapDistance, Examples)
{
  const Subspace e1 = Subspace::Span(Unit(2, 0));
  EXPECT_DOUBLE_EQ(GapDistance(e1, e1), 0.0);
  EXPECT_NEAR(GapDistance(e1, Subspace::Span(Unit(2, 1))), 1.0, 1e-15);
  const double theta = 0.3;
  const Vector rotated = V2(std::cos(theta), std::sin(theta));
  const double oracle_gap = oracle::ProjectorGap(Unit(2, 0), rotated);
  EXPECT_NEAR(oracle_gap, std::sin(theta), 1e-14);
  EXPECT_NEAR(GapDistance(e1, Subspace::Span(rotated)), oracle_gap, 1e-14);
  EXPECT_NEAR(GapDistance(e1, Subspace::Span(rotated)), 0.29552020666133955, 1e-14);
}

TEST(Relation, IdentityParts)
{
  const LinearRelation r = LinearRelation::FromOperator(Matrix::Identity(2, 2), Subspace::Full(2));
  EXPECT_TRUE(r.Dom().IsFull());
  EXPECT_TRUE(r.Ran().IsFull());
  EXPECT_TRUE(r.Ker().IsZero());
  EXPECT_TRUE(r.Mul().IsZero());
  EXPECT_TRUE(r.IsOperator());
}

TEST(Relation, PurelyMultivalued)
{
  const LinearRelation r = LinearRelation::FromPairs(Matrix::Zero(1, 1), Matrix::Ones(1, 1));
  EXPECT_TRUE(r.Dom().IsZero());
  EXPECT_TRUE(r.Mul().IsFull());
  EXPECT_FALSE(r.IsOperator());
}

TEST(Relation, InverseOfDiagonal)
{
  const LinearRelation r =
      LinearRelation::FromOperator(oracle::Diag({1.0, kI}), Subspace::Full(2));
  const LinearRelation inv = RelationInverse(r);
  const LinearRelation expected =
      LinearRelation::FromOperator(oracle::Diag({1.0, -kI}), Subspace::Full(2));
  EXPECT_LE(GapDistance(inv.Graph(), expected.Graph()), 1e-12);
}

TEST(Relation, AdjointExamples)
{
  const MetricMatrix id = MetricMatrix::Identity(2);
  const LinearRelation h = LinearRelation::FromOperator(oracle::Diag({1.0, 2.0}), Subspace::Full(2));
  EXPECT_LE(GapDistance(RelationAdjoint(h, id, id).Graph(), h.Graph()), 1e-12);

  const MetricMatrix one = MetricMatrix::Identity(1);
  const LinearRelation zero_dom(1, 1, Subspace::Zero(2));
  EXPECT_TRUE(RelationAdjoint(zero_dom, one, one).Graph().IsFull());

  // J-adjoint of diag(i, -i) with J = diag(1, -1), checked on random pairs.
  const Matrix j = oracle::Diag({1.0, -1.0});
  const MetricMatrix jm = MetricMatrix::CanonicalSymmetry(j);
  const Matrix t = oracle::Diag({kI, -kI});
  const LinearRelation adj =
      RelationAdjoint(LinearRelation::FromOperator(t, Subspace::Full(2)), jm, jm);
  ASSERT_TRUE(adj.IsOperator());
  const Matrix tc = adj.OperatorMatrix();  // on the orthonormal basis of Dom = C^2
  const Matrix dom = adj.Dom().Basis();
  const Matrix tc_std = tc * dom.adjoint();
  EXPECT_LE((tc_std - oracle::Diag({-kI, kI})).norm(), 1e-12);
  Rng rng(3);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k)
  {
    const Vector x = RandomGaussianVector(2, rng);
    const Vector y = RandomGaussianVector(2, rng);
    worst = std::max(worst, std::abs((t * x).dot(j * y) - x.dot(j * (tc_std * y))));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(Relation, AdjointRejectsNonInvolution)
{
  const LinearRelation r = LinearRelation::FromOperator(Matrix::Identity(2, 2), Subspace::Full(2));
  const MetricMatrix m(oracle::Diag({2.0, 1.0}));
  EXPECT_THROW(RelationAdjoint(r, m, m), ValidationError);
}

TEST(Eigenspace, Examples)
{
  const LinearRelation r = LinearRelation::FromOperator(oracle::Diag({1.0, kI}), Subspace::Full(2));
  EXPECT_LE(GapDistance(Eigenspace(r, kI), Subspace::Span(Unit(2, 1))), 1e-12);
  EXPECT_TRUE(Eigenspace(LinearRelation::FullRelation(1, 1), kI).IsFull());
  Matrix nil(2, 2);
  nil << 0, 1, 0, 0;
  const Subspace e0 = Eigenspace(LinearRelation::FromOperator(nil, Subspace::Full(2)), 0.0);
  EXPECT_LE(GapDistance(e0, Subspace::Span(Unit(2, 0))), 1e-12);
}

TEST(OperatorPart, Examples)
{
  const LinearRelation op = LinearRelation::FromOperator(oracle::Diag({1.0, 3.0}), Subspace::Full(2));
  EXPECT_LE(GapDistance(OperatorPart(op).Graph(), op.Graph()), 1e-12);

  // {(x, (x, t))} in C + C^2 -> graph of x -> (x, 0).
  Matrix top(1, 2);
  top << 1, 0;
  Matrix bottom(2, 2);
  bottom << 1, 0, 0, 1;
  const LinearRelation r = LinearRelation::FromPairs(top, bottom);
  Matrix op_top(1, 1);
  op_top << 1;
  Matrix op_bottom(2, 1);
  op_bottom << 1, 0;
  EXPECT_LE(GapDistance(OperatorPart(r).Graph(), LinearRelation::FromPairs(op_top, op_bottom).Graph()),
            1e-12);
}

TEST(OperatorPart, RandomRoundTrip)
{
  Rng rng(11);
  // Graph of dim 3 in C^3 + C^3 with a one-dimensional multivalued part.
  const Matrix a = RandomGaussian(3, 3, rng);
  const Vector mul = RandomGaussianVector(3, rng);
  Matrix top(3, 3);
  top << Unit(3, 0), Unit(3, 1), Vector::Zero(3);
  Matrix bottom(3, 3);
  bottom << a * Unit(3, 0), a * Unit(3, 1), mul;
  const LinearRelation r = LinearRelation::FromPairs(top, bottom);
  ASSERT_EQ(r.Dim(), 3);
  ASSERT_EQ(r.Mul().Dim(), 1);
  const LinearRelation p = OperatorPart(r);
  EXPECT_EQ(p.Dim(), 2);
  EXPECT_TRUE(p.Mul().IsZero());
  Matrix mul_pair(6, 1);
  mul_pair << Vector::Zero(3), mul;
  Matrix both(6, 3);
  both << p.Graph().Basis(), mul_pair;
  EXPECT_LE(GapDistance(Subspace::Span(both), r.Graph()), 1e-10);
}

class SubspaceProperties : public ::testing::TestWithParam<int>
{
};

TEST_P(SubspaceProperties, Invariants)
{
  Rng rng(100 + GetParam());
  const Index n = 2 + GetParam() % 7;
  const Index k = 1 + GetParam() % n;
  const Subspace a = Subspace::Span(RandomGaussian(n, k, rng));
  ASSERT_EQ(a.Dim(), k);
  EXPECT_LE((a.Basis().adjoint() * a.Basis() - Matrix::Identity(k, k)).norm(), 1e-12);
  EXPECT_LE(GapDistance(a, Subspace::Span(a.Basis())), 10 * kDefaultTol);
  EXPECT_LE(GapDistance(OrthoComplement(OrthoComplement(a)), a), kDefaultTol);

  // A relation with a random multivalued part.
  const Index l = 1 + GetParam() % 4;
  const Index r_dim = 1 + (GetParam() / 3) % 4;
  const Matrix top = RandomGaussian(l, 3, rng);
  Matrix top_deg = top;
  top_deg.col(2).setZero();
  const LinearRelation r = LinearRelation::FromPairs(top_deg, RandomGaussian(r_dim, 3, rng));
  EXPECT_EQ(r.Dom().Dim() + r.Mul().Dim(), r.Dim());

  const MetricMatrix ml = MetricMatrix::Identity(l);
  const MetricMatrix mr = MetricMatrix::Identity(r_dim);
  const LinearRelation rr = RelationAdjoint(RelationAdjoint(r, ml, mr), mr, ml);
  EXPECT_LE(GapDistance(rr.Graph(), r.Graph()), 1e-9);

  // Eigenspace against an LU kernel oracle at an actual eigenvalue.
  const Matrix m = RandomGaussian(n, n, rng);
  Eigen::ComplexEigenSolver<Matrix> eig(m, false);
  const Complex lambda = eig.eigenvalues()(0);
  const Subspace es = Eigenspace(LinearRelation::FromOperator(m, Subspace::Full(n)), lambda);
  const Matrix ker = oracle::Kernel(m - lambda * Matrix::Identity(n, n), 1e-9);
  ASSERT_EQ(es.Dim(), ker.cols());
  EXPECT_LE(oracle::ProjectorGap(es.Basis(), ker), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Random, SubspaceProperties, ::testing::Range(0, 40));
