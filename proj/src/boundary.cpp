// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "kreinlab/linalg.hpp"
#include "kreinlab/random.hpp"

namespace kreinlab
{

namespace
{

Matrix StackGraph(const Matrix &q, const Matrix &mq)
{
  Matrix out(q.rows() + mq.rows(), q.cols());
  out << q, mq;
  return out;
}

// [x, y'] - [x', y] for pairs (x, x'), (y, y').
Complex KreinGreen(const Matrix &j, const Vector &xh, const Vector &yh)
{
  const Index n = j.rows();
  return xh.head(n).dot(j * yh.tail(n)) - xh.tail(n).dot(j * yh.head(n));
}

// <G0 x, G1 y>' - <G1 x, G0 y>'.
Complex BoundaryGreen(const Vector &bx, const Vector &by, Index m)
{
  return bx.head(m).dot(by.tail(m)) - bx.tail(m).dot(by.head(m));
}

double ClusterTol(double scale)
{
  return 1e-8 * std::max(1.0, scale);
}

// Eigenvalues of T are the lambda with (M - lambda) Q rank deficient. The
// eigenvalues of the compression Q^* M Q are the candidates; each is kept only
// when the residual certifies an eigenvector inside the domain.
std::vector<Complex> DistinctEigenvalues(const OperatorWithDomain &op)
{
  std::vector<Complex> out;
  const Matrix &q = op.Domain().Basis();
  const Matrix mq = op.ImageOfBasis();
  const Matrix b = q.adjoint() * mq;
  Eigen::ComplexEigenSolver<Matrix> eig(b, false);
  const double scale = std::max(1.0, linalg::SpectralNorm(op.Mat()));
  for (Index k = 0; k < eig.eigenvalues().size(); ++k)
  {
    const Complex lambda = eig.eigenvalues()(k);
    const bool seen = std::any_of(out.begin(), out.end(), [&](Complex mu) {
      return std::abs(mu - lambda) <= ClusterTol(scale);
    });
    if (seen)
    {
      continue;
    }
    if (linalg::SingularValues(mq - lambda * q)(q.cols() - 1) <= kGapTol * scale)
    {
      out.push_back(lambda);
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace

LinearRelation BoundaryTriple::Relation() const
{
  if (boundary_dim == 0)
  {
    throw ValidationError("BoundaryTriple::Relation: boundary space is trivial");
  }
  const Matrix &dom = s_adjoint.Graph().Basis();
  return LinearRelation::FromPairs(dom, gamma_s * dom, s_adjoint.Graph().Tol());
}

BoundaryTriple ConstructObt(const OperatorWithDomain &s, std::uint64_t seed)
{
  if (Classify(s) != Classification::kSymmetric)
  {
    throw ValidationError("ConstructObt: S is not symmetric");
  }
  const Index n = s.Dim();
  const Matrix &j = s.Space().J();
  const Matrix &qs = s.Domain().Basis();
  // A = J S is Hilbert-symmetric; N_{+-i} = ran(A +- i)^perp.
  const Matrix aq = j * s.ImageOfBasis();
  const Matrix e_plus = linalg::NullSpace((aq + kI * qs).adjoint(), s.Tol());
  const Matrix e_minus = linalg::NullSpace((aq - kI * qs).adjoint(), s.Tol());
  if (e_plus.cols() != e_minus.cols())
  {
    throw InvariantViolation("ConstructObt: unequal defect numbers");
  }
  const Index m = e_plus.cols();

  // (x, x') maps to (x, z = J x') in (J S)^* and splits as
  // graph(A) + (f, i f) + (g, -i g); the deficiency coordinates are
  // c_+ = E_+^*(x - i z) / 2 and c_- = E_-^*(x + i z) / 2.
  Matrix c_plus(m, 2 * n);
  Matrix c_minus(m, 2 * n);
  c_plus << 0.5 * e_plus.adjoint(), (-0.5 * kI) * e_plus.adjoint() * j;
  c_minus << 0.5 * e_minus.adjoint(), (0.5 * kI) * e_minus.adjoint() * j;
  Matrix gamma_s(2 * m, 2 * n);
  gamma_s << c_plus + c_minus, kI * (c_plus - c_minus);

  BoundaryTriple out{n, m, std::move(gamma_s), KreinAdjoint(s), s, 0.0};

  const Matrix ker_check = out.gamma_s * StackGraph(qs, s.ImageOfBasis());
  if (ker_check.size() > 0 && ker_check.norm() > 1e-10 * std::max(1.0, StackGraph(qs, s.ImageOfBasis()).norm()))
  {
    throw InvariantViolation("ConstructObt: Gamma does not vanish on the graph of S");
  }
  if (out.s_adjoint.Dim() != 2 * n - s.DomainDim())
  {
    throw InvariantViolation("ConstructObt: unexpected dimension of S^c");
  }

  Rng rng(seed);
  const Matrix &dom = out.s_adjoint.Graph().Basis();
  const double scale = std::max(1.0, std::pow(linalg::SpectralNorm(out.gamma_s), 2));
  double worst = 0.0;
  for (int k = 0; k < 100; ++k)
  {
    const Vector xh = dom * RandomGaussianVector(dom.cols(), rng);
    const Vector yh = dom * RandomGaussianVector(dom.cols(), rng);
    const Complex lhs = KreinGreen(j, xh, yh);
    const Complex rhs = BoundaryGreen(out.gamma_s * xh, out.gamma_s * yh, m);
    worst = std::max(worst, std::abs(lhs - rhs) / (xh.norm() * yh.norm() * scale));
  }
  out.green_residual = worst;
  if (worst > 1e-10)
  {
    throw InvariantViolation("ConstructObt: Green identity residual " + std::to_string(worst) +
                             " exceeds 1e-10");
  }
  return out;
}

BoundaryTriple SwapBoundaryMaps(const BoundaryTriple &triple)
{
  BoundaryTriple out = triple;
  const Index m = triple.boundary_dim;
  out.gamma_s.topRows(m) = triple.gamma_s.bottomRows(m);
  out.gamma_s.bottomRows(m) = -triple.gamma_s.topRows(m);
  return out;
}

Matrix BoundaryMetric(Index boundary_dim)
{
  const Index m = boundary_dim;
  Matrix g = Matrix::Zero(2 * m, 2 * m);
  g.topRightCorner(m, m) = -kI * Matrix::Identity(m, m);
  g.bottomLeftCorner(m, m) = kI * Matrix::Identity(m, m);
  return g;
}

Matrix LtGram(const Matrix &lt_basis)
{
  if (lt_basis.cols() == 0)
  {
    return Matrix(0, 0);
  }
  return linalg::Hermitian(lt_basis.adjoint() * BoundaryMetric(lt_basis.rows() / 2) * lt_basis);
}

RestrictedBoundary RestrictToT(const BoundaryTriple &triple, const OperatorWithDomain &t)
{
  Require(t.Dim() == triple.base_dim, "RestrictToT: dimension mismatch");
  const Matrix pts = StackGraph(t.Domain().Basis(), t.ImageOfBasis());
  const Subspace &sc = triple.s_adjoint.Graph();
  for (Index k = 0; k < pts.cols(); ++k)
  {
    if (sc.RelativeDistance(pts.col(k)) > kGapTol)
    {
      throw InvariantViolation("RestrictToT: graph of T is not contained in S^c");
    }
  }
  const Index m = triple.boundary_dim;
  const Matrix values = triple.gamma_s * pts;
  RestrictedBoundary out;
  out.gamma0 = values.topRows(m);
  out.gamma1 = values.bottomRows(m);
  out.lt.basis = m > 0 ? linalg::ColumnSpan(values, t.Tol()) : Matrix(0, 0);
  out.lt.gram = LtGram(out.lt.basis);
  return out;
}

std::string_view ToString(Provenance p)
{
  return p == Provenance::kProjection ? "projection" : "resolvent";
}

BoundaryPair BoundaryPair::Orthonormalized() const
{
  BoundaryPair out = *this;
  if (EDim() == 0)
  {
    return out;
  }
  const Matrix root = linalg::SqrtPsd(e_gram);
  const Matrix inv_root = linalg::InvSqrtPd(e_gram);
  out.gamma01 = root * gamma01;
  out.e_basis = e_basis * inv_root;
  out.e_gram = Matrix::Identity(EDim(), EDim());
  return out;
}

BoundaryPair Gamma01Projection(const OperatorWithDomain &t, const Splitting &split)
{
  const Matrix &qs = split.s.Domain().Basis();
  const Matrix &qn = split.n.Domain().Basis();
  Matrix both(t.Dim(), qs.cols() + qn.cols());
  both << qs, qn;
  const Matrix coords = linalg::Solve(both, t.Domain().Basis());
  BoundaryPair out;
  out.e_basis = qn;
  out.e_gram = split.gamma_n_gram;
  out.gamma01 = coords.bottomRows(qn.cols());
  out.provenance = Provenance::kProjection;
  return out;
}

BoundaryPair Gamma01Resolvent(const OperatorWithDomain &t, const DeficiencyData &defi)
{
  const Index n = t.Dim();
  const Matrix &q = t.Domain().Basis();
  const Matrix shifted = (t.Space().J() * t.Mat() + kI * Matrix::Identity(n, n)) * q;
  const Subspace e = DnViaResolvent(t, defi);
  // (J T + i)^{-1} P_i (J T + i) in domain coordinates.
  const Matrix back = linalg::Solve(shifted, defi.p_i * shifted);
  BoundaryPair out;
  out.e_basis = e.Basis();
  out.e_gram = linalg::Hermitian(e.Basis().adjoint() * GammaGramAmbient(t) * e.Basis());
  out.gamma01 = e.Basis().adjoint() * (q * back);
  out.provenance = Provenance::kResolvent;
  return out;
}

BoundaryPair TransformPair(const BoundaryPair &pair, const Matrix &unitary)
{
  Require(unitary.rows() == pair.EDim() && unitary.cols() == pair.EDim(),
          "TransformPair: unitary has the wrong size");
  if ((unitary.adjoint() * unitary - Matrix::Identity(pair.EDim(), pair.EDim())).norm() > 1e-10)
  {
    throw ValidationError("TransformPair: matrix is not unitary");
  }
  BoundaryPair out = pair.Orthonormalized();
  out.gamma01 = unitary * out.gamma01;
  out.e_basis = out.e_basis * unitary.adjoint();
  return out;
}

double PairGap(const BoundaryPair &a, const BoundaryPair &b)
{
  const Matrix ma = a.AmbientMap();
  const Matrix mb = b.AmbientMap();
  Require(ma.rows() == mb.rows() && ma.cols() == mb.cols(), "PairGap: shapes differ");
  if (ma.size() == 0)
  {
    return 0.0;
  }
  return linalg::SpectralNorm(ma - mb) / std::max(1.0, linalg::SpectralNorm(ma));
}

double GreenResidualPair(const BoundaryPair &pair, const OperatorWithDomain &t, int samples,
                         std::uint64_t seed)
{
  Require(pair.gamma01.cols() == t.DomainDim(), "GreenResidualPair: pair does not match T");
  if (t.DomainDim() == 0)
  {
    return 0.0;
  }
  Rng rng(seed);
  const Matrix &q = t.Domain().Basis();
  const Matrix &j = t.Space().J();
  double worst = 0.0;
  for (int k = 0; k < samples; ++k)
  {
    const Vector a = RandomGaussianVector(q.cols(), rng);
    const Vector b = RandomGaussianVector(q.cols(), rng);
    const Vector x = q * a;
    const Vector y = q * b;
    const Vector tx = t.Mat() * x;
    const Vector ty = t.Mat() * y;
    const Complex lhs = x.dot(j * ty) - tx.dot(j * y);
    const Vector ga = pair.gamma01 * a;
    const Vector gb = pair.gamma01 * b;
    const Complex rhs = kI * ga.dot(pair.e_gram * gb);
    const double norm = std::sqrt(x.squaredNorm() + tx.squaredNorm()) *
                        std::sqrt(y.squaredNorm() + ty.squaredNorm());
    worst = std::max(worst, std::abs(lhs - rhs) / norm);
  }
  return worst;
}

double GreenResidualBoundary(const RestrictedBoundary &rb, const OperatorWithDomain &t, int samples,
                             std::uint64_t seed)
{
  if (t.DomainDim() == 0)
  {
    return 0.0;
  }
  Rng rng(seed);
  const Matrix &q = t.Domain().Basis();
  const Matrix &j = t.Space().J();
  const Index m = rb.gamma0.rows();
  Matrix stacked(2 * m, q.cols());
  stacked << rb.gamma0, rb.gamma1;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k)
  {
    const Vector a = RandomGaussianVector(q.cols(), rng);
    const Vector b = RandomGaussianVector(q.cols(), rng);
    Vector xh(2 * t.Dim());
    Vector yh(2 * t.Dim());
    xh << q * a, t.Mat() * (q * a);
    yh << q * b, t.Mat() * (q * b);
    const Complex lhs = KreinGreen(j, xh, yh);
    const Complex rhs = BoundaryGreen(stacked * a, stacked * b, m);
    worst = std::max(worst, std::abs(lhs - rhs) / (xh.norm() * yh.norm()));
  }
  return worst;
}

double IsometryResidual(const BoundaryTriple &triple, int samples, std::uint64_t seed)
{
  const GraphKreinSpace g(triple.s.Space());
  const Matrix metric = g.Metric();
  const Matrix bmetric = BoundaryMetric(triple.boundary_dim);
  const Matrix &dom = triple.s_adjoint.Graph().Basis();
  const double scale = std::max(1.0, std::pow(linalg::SpectralNorm(triple.gamma_s), 2));
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k)
  {
    const Vector xh = dom * RandomGaussianVector(dom.cols(), rng);
    const Vector yh = dom * RandomGaussianVector(dom.cols(), rng);
    const Complex lhs = xh.dot(metric * yh);
    const Vector u = triple.gamma_s * xh;
    const Vector v = triple.gamma_s * yh;
    const Complex rhs = u.dot(bmetric * v);
    worst = std::max(worst, std::abs(lhs - rhs) / (xh.norm() * yh.norm() * scale));
  }
  return worst;
}

Vector PhiMap(const BoundaryTriple &triple, const Splitting &split, const Vector &value)
{
  Require(value.size() == 2 * triple.boundary_dim, "PhiMap: value has the wrong dimension");
  const Matrix &qn = split.n.Domain().Basis();
  if (value.norm() == 0.0)
  {
    return Vector::Zero(triple.base_dim);
  }
  const Matrix k = triple.gamma_s * StackGraph(qn, split.n.ImageOfBasis());
  const Vector beta = linalg::Solve(k, value);
  if ((k * beta - value).norm() > kGapTol * value.norm())
  {
    throw ValidationError("PhiMap: value does not lie in L_T");
  }
  return qn * beta;
}

double PhiIsometryResidual(const BoundaryTriple &triple, const Splitting &split,
                           const RestrictedBoundary &rb, int samples, std::uint64_t seed)
{
  const Matrix &lt = rb.lt.basis;
  if (lt.cols() == 0)
  {
    return 0.0;
  }
  const Matrix bmetric = BoundaryMetric(triple.boundary_dim);
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k)
  {
    const Vector u = lt * RandomGaussianVector(lt.cols(), rng);
    const Vector v = lt * RandomGaussianVector(lt.cols(), rng);
    const Complex lhs = GammaNInner(split, PhiMap(triple, split, u), PhiMap(triple, split, v));
    const Complex rhs = u.dot(bmetric * v);
    worst = std::max(worst, std::abs(lhs - rhs) / (u.norm() * v.norm()));
  }
  return worst;
}

RealEigenvalueReport RealEigenvalueCheck(const OperatorWithDomain &t, const OperatorWithDomain &s,
                                         const BoundaryPair *pair)
{
  RealEigenvalueReport report;
  report.t_eigenvalues = DistinctEigenvalues(t);
  const std::vector<Complex> s_eigs = DistinctEigenvalues(s);
  const auto is_real = [](Complex l) { return std::abs(l.imag()) <= ClusterTol(std::abs(l)); };
  for (Complex l : report.t_eigenvalues)
  {
    if (is_real(l))
    {
      report.t_real.push_back(l.real());
    }
  }
  for (Complex l : s_eigs)
  {
    if (is_real(l))
    {
      report.s_real.push_back(l.real());
    }
  }
  const auto nearest = [](double x, const std::vector<double> &set) {
    double best = set.empty() ? 1.0 : std::abs(set.front() - x);
    for (double y : set)
    {
      best = std::min(best, std::abs(y - x));
    }
    return best;
  };
  for (double l : report.t_real)
  {
    report.max_value_mismatch = std::max(report.max_value_mismatch, nearest(l, report.s_real));
  }
  for (double l : report.s_real)
  {
    report.max_value_mismatch = std::max(report.max_value_mismatch, nearest(l, report.t_real));
  }
  const LinearRelation t_graph = t.Graph();
  const LinearRelation s_graph = s.DomainDim() > 0 ? s.Graph() : t_graph;
  for (double l : report.t_real)
  {
    const Subspace et = Eigenspace(t_graph, l);
    const Subspace es = s.DomainDim() > 0 ? Eigenspace(s_graph, l) : Subspace::Zero(t.Dim());
    const double gap = et.IsZero() ? 1.0 : GapDistance(et, es);
    report.max_eigenspace_gap = std::max(report.max_eigenspace_gap, gap);
  }
  if (pair != nullptr)
  {
    const Matrix &q = t.Domain().Basis();
    for (Complex l : report.t_eigenvalues)
    {
      const Subspace et = Eigenspace(t_graph, l);
      for (Index k = 0; k < et.Dim(); ++k)
      {
        const Vector x = et.Basis().col(k);
        const Vector a = q.adjoint() * x;
        const Vector g = pair->gamma01 * a;
        const double lhs = 2.0 * l.imag() * IndefiniteInner(t.Space(), x, x).real();
        const double rhs = g.dot(pair->e_gram * g).real();
        const double norm2 = x.squaredNorm() + (t.Mat() * x).squaredNorm();
        report.max_identity_residual = std::max(report.max_identity_residual, std::abs(lhs - rhs) / norm2);
      }
    }
  }
  report.pass = report.max_value_mismatch <= 1e-8 && report.max_eigenspace_gap <= kGapTol &&
                report.max_identity_residual <= 1e-8;
  return report;
}

}  // namespace kreinlab
