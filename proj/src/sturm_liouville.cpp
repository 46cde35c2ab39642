// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "kreinlab/linalg.hpp"
#include "kreinlab/random.hpp"

namespace kreinlab::sl
{

namespace
{

Matrix CoordinateSpan(const std::vector<bool> &select)
{
  const Index n = Index(select.size());
  const Index d = std::count(select.begin(), select.end(), true);
  Matrix basis = Matrix::Zero(n, d);
  Index c = 0;
  for (Index k = 0; k < n; ++k)
  {
    if (select[k])
    {
      basis(k, c++) = 1.0;
    }
  }
  return basis;
}

}  // namespace

void GridSpec::Validate() const
{
  if (!(n_points >= 8))
  {
    throw ValidationError("GridSpec: n_points must be at least 8");
  }
  if (!(x_max > 0.0) || !std::isfinite(x_max))
  {
    throw ValidationError("GridSpec: x_max must be positive");
  }
}

Index PotentialSpec::OmegaCount() const
{
  return std::count(omega_mask.begin(), omega_mask.end(), true);
}

void PotentialSpec::Validate(const GridSpec &grid) const
{
  grid.Validate();
  if (Index(omega_mask.size()) != grid.n_points || q_values.size() != grid.n_points)
  {
    throw ValidationError("PotentialSpec: mask and q must have one entry per grid point");
  }
  if (OmegaCount() == 0)
  {
    throw ValidationError("PotentialSpec: Omega is empty");
  }
  if (!std::isfinite(h))
  {
    throw ValidationError("PotentialSpec: h must be a finite real number");
  }
  for (Index k = 0; k < grid.n_points; ++k)
  {
    const Complex q = q_values(k);
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
    {
      throw ValidationError("PotentialSpec: q is not finite at node " + std::to_string(k));
    }
    if (omega_mask[k] && !(q.imag() > 0.0))
    {
      throw ValidationError("PotentialSpec: Im q must be positive on Omega (node " +
                            std::to_string(k) + ")");
    }
    if (!omega_mask[k] && q != Complex(0.0))
    {
      throw ValidationError("PotentialSpec: q must vanish off Omega (node " + std::to_string(k) +
                            ")");
    }
  }
}

PotentialSpec IntervalPotential(const GridSpec &grid, double lo, double hi, double imq, double h,
                                double re_q)
{
  grid.Validate();
  if (!(lo >= 0.0 && lo <= hi && hi <= 1.0))
  {
    throw ValidationError("IntervalPotential: need 0 <= lo <= hi <= 1");
  }
  std::vector<bool> mask(grid.n_points);
  const double a = lo * grid.x_max;
  const double b = hi * grid.x_max;
  const double slack = 1e-12 * grid.x_max;
  for (Index k = 0; k < grid.n_points; ++k)
  {
    const double t = grid.Node(k);
    mask[k] = t >= a - slack && t <= b + slack;
  }
  return MaskPotential(mask, Complex(re_q, imq), h);
}

PotentialSpec MaskPotential(const std::vector<bool> &mask, Complex q_on_omega, double h)
{
  PotentialSpec pot{mask, Vector::Zero(Index(mask.size())), h};
  for (std::size_t k = 0; k < mask.size(); ++k)
  {
    if (mask[k])
    {
      pot.q_values(Index(k)) = q_on_omega;
    }
  }
  return pot;
}

RealVector QuadratureWeights(const GridSpec &grid)
{
  RealVector w = RealVector::Ones(grid.n_points);
  w(0) = 0.5;
  return w;
}

Matrix FiniteDifferenceMatrix(const GridSpec &grid, const Vector &q_values, double h)
{
  const Index n = grid.n_points;
  Require(q_values.size() == n, "FiniteDifferenceMatrix: q has the wrong length");
  const double s2 = grid.Step() * grid.Step();
  Matrix l = Matrix::Zero(n, n);
  for (Index k = 0; k < n; ++k)
  {
    l(k, k) = 2.0 / s2 + q_values(k);
    if (k + 1 < n)
    {
      l(k, k + 1) = -1.0 / s2;
      l(k + 1, k) = -1.0 / s2;
    }
  }
  // Ghost value y_{-1} = y_1 - 2 step h y_0 gives the row
  // ((2 + 2 step h) y_0 - 2 y_1) / step^2; the half weight at t_0 turns the
  // pair (-2, -1) into (-sqrt 2, -sqrt 2).
  l(0, 0) += 2.0 * grid.Step() * h / s2;
  if (n > 1)
  {
    l(0, 1) = -std::sqrt(2.0) / s2;
    l(1, 0) = -std::sqrt(2.0) / s2;
  }
  return l;
}

Vector ToEuclidean(const GridSpec &grid, const Vector &y)
{
  const RealVector scale = (grid.Step() * QuadratureWeights(grid)).cwiseSqrt();
  return scale.cast<Complex>().cwiseProduct(y);
}

Vector FromEuclidean(const GridSpec &grid, const Vector &z)
{
  const RealVector scale = (grid.Step() * QuadratureWeights(grid)).cwiseSqrt().cwiseInverse();
  return scale.cast<Complex>().cwiseProduct(z);
}

std::vector<bool> DomainNodes(const std::vector<bool> &omega_mask)
{
  const Index n = Index(omega_mask.size());
  std::vector<bool> keep(omega_mask.size(), true);
  for (Index k = 0; k < n; ++k)
  {
    if (omega_mask[k])
    {
      continue;
    }
    for (Index d = -2; d <= 2; ++d)
    {
      const Index j = k + d;
      if (j >= 0 && j < n && omega_mask[j])
      {
        keep[k] = false;
      }
    }
  }
  return keep;
}

OperatorWithDomain Discretize(const GridSpec &grid, const PotentialSpec &pot)
{
  pot.Validate(grid);
  const Matrix l = FiniteDifferenceMatrix(grid, pot.q_values, pot.h);
  const Index n = grid.n_points;
  const std::vector<bool> keep = DomainNodes(pot.omega_mask);
  const Subspace domain = std::all_of(keep.begin(), keep.end(), [](bool b) { return b; })
                              ? Subspace::Full(n)
                              : Subspace::FromOrthonormal(CoordinateSpan(keep));
  OperatorWithDomain t(KreinSpace::Hilbert(n), l, domain);
  if (Classify(t) == Classification::kNeither)
  {
    throw NotDissipative("Discretize: discretized operator is not dissipative");
  }
  return t;
}

Splitting SplitByMask(const OperatorWithDomain &t, const std::vector<bool> &omega_mask)
{
  const Index n = t.Dim();
  Require(Index(omega_mask.size()) == n, "SplitByMask: mask has the wrong length");
  const Matrix &q = t.Domain().Basis();
  // Domain nodes are coordinate vectors, so membership is read off the rows.
  std::vector<bool> in_domain(omega_mask.size(), false);
  for (Index k = 0; k < n; ++k)
  {
    in_domain[k] = q.row(k).norm() > 0.5;
  }
  std::vector<bool> off(omega_mask.size());
  std::vector<bool> on(omega_mask.size());
  for (Index k = 0; k < n; ++k)
  {
    off[k] = in_domain[k] && !omega_mask[k];
    on[k] = in_domain[k] && omega_mask[k];
  }
  Splitting masked{t.Restrict(Subspace::FromOrthonormal(CoordinateSpan(off))),
                   t.Restrict(Subspace::FromOrthonormal(CoordinateSpan(on))), Matrix()};
  masked.gamma_n_gram = GammaGram(masked.n);

  const Splitting split = Split(t);
  const double gap_s = GapDistance(masked.s.Domain(), split.s.Domain());
  const double gap_n = GapDistance(masked.n.Domain(), split.n.Domain());
  if (gap_s > kGapTol || gap_n > kGapTol)
  {
    throw InvariantViolation("SplitByMask: masked splitting differs from the decomposition (gap " +
                             std::to_string(std::max(gap_s, gap_n)) + ")");
  }
  return masked;
}

double GammaCheck(const OperatorWithDomain &t, const GridSpec &grid, const PotentialSpec &pot,
                  int samples, std::uint64_t seed)
{
  Rng rng(seed);
  const Matrix &q = t.Domain().Basis();
  const RealVector w = QuadratureWeights(grid);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s)
  {
    const Vector z = q * RandomGaussianVector(q.cols(), rng);
    const Vector y = FromEuclidean(grid, z);
    const double lhs = GammaForm(t, z, z).real();
    double rhs = 0.0;
    for (Index k = 0; k < grid.n_points; ++k)
    {
      if (pot.omega_mask[k])
      {
        rhs += 2.0 * pot.q_values(k).imag() * std::norm(y(k)) * grid.Step() * w(k);
      }
    }
    worst = std::max(worst, std::abs(lhs - rhs) / z.squaredNorm());
  }
  return worst;
}

double CayleyNorm(const Matrix &l)
{
  if (l.rows() == 0)
  {
    return 0.0;
  }
  const Index n = l.rows();
  const Matrix plus = l + kI * Matrix::Identity(n, n);
  Eigen::PartialPivLU<Matrix> lu(plus);
  const RealVector sigma = linalg::SingularValues(plus);
  if (sigma(n - 1) <= kKernelTol * std::max(1.0, sigma(0)))
  {
    throw NotDissipative("CayleyNorm: L + i I is singular");
  }
  // (L - i) and (L + i)^{-1} commute.
  return linalg::SpectralNorm(lu.solve(l - kI * Matrix::Identity(n, n)));
}

double CayleyNorm(Complex l)
{
  if (l == -kI)
  {
    throw NotDissipative("CayleyNorm: L + i I is singular");
  }
  return std::abs((l - kI) / (l + kI));
}

double CayleyNormOmega(const Matrix &l, const std::vector<bool> &omega_mask)
{
  Require(Index(omega_mask.size()) == l.rows(), "CayleyNormOmega: mask has the wrong length");
  const Matrix p = CoordinateSpan(omega_mask);
  return CayleyNorm(Matrix(p.adjoint() * l * p));
}

std::vector<SLStudyRow> ConvergenceStudy(const StudyOptions &opts)
{
  if (opts.levels < 3)
  {
    throw ValidationError("ConvergenceStudy: at least 3 levels are required");
  }
  opts.base.Validate();
  std::vector<SLStudyRow> rows;
  for (int level = 0; level < opts.levels; ++level)
  {
    GridSpec grid{opts.base.x_max, opts.base.n_points << level};
    const PotentialSpec pot =
        IntervalPotential(grid, opts.omega_lo, opts.omega_hi, opts.imq, opts.h);
    const OperatorWithDomain t = Discretize(grid, pot);
    SLStudyRow row;
    row.level = level;
    row.n_points = grid.n_points;
    row.x_max = grid.x_max;
    row.cayley_norm = CayleyNormOmega(t.Mat(), pot.omega_mask);
    row.gamma_residual = GammaCheck(t, grid, pot, 100, opts.seed);
    rows.push_back(row);
  }
  return rows;
}

bool TrendOk(const std::vector<SLStudyRow> &rows)
{
  for (std::size_t k = 0; k < rows.size(); ++k)
  {
    if (rows[k].cayley_norm > 1.0 + kDefaultTol)
    {
      return false;
    }
    if (k > 0 && rows[k].cayley_norm < rows[k - 1].cayley_norm - 1e-6)
    {
      return false;
    }
  }
  return true;
}

void WriteCsv(std::ostream &os, const std::vector<SLStudyRow> &rows)
{
  os << "level,n_points,x_max,cayley_norm,gamma_residual\n";
  os << std::setprecision(15);
  for (const auto &r : rows)
  {
    os << r.level << ',' << r.n_points << ',' << r.x_max << ',' << r.cayley_norm << ','
       << r.gamma_residual << '\n';
  }
}

}  // namespace kreinlab::sl
