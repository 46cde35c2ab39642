// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_STURM_LIOUVILLE_HPP
#define KREINLAB_STURM_LIOUVILLE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kreinlab/decomposition.hpp"

namespace kreinlab::sl
{

/// Vertex grid t_k = k * step, k = 0..n-1, on [0, x_max); y(x_max) = 0.
struct GridSpec
{
  double x_max = 20.0;
  Index n_points = 64;

  double Step() const { return x_max / double(n_points); }
  double Node(Index k) const { return double(k) * Step(); }
  void Validate() const;
};

struct PotentialSpec
{
  std::vector<bool> omega_mask;
  Vector q_values;
  double h = 0.0;

  Index OmegaCount() const;
  void Validate(const GridSpec &grid) const;
};

/// Omega = {t_k : lo * x_max <= t_k <= hi * x_max}, q = re_q + i imq on Omega.
PotentialSpec IntervalPotential(const GridSpec &grid, double lo, double hi, double imq, double h,
                                double re_q = 0.0);
/// Potential on an explicit mask.
PotentialSpec MaskPotential(const std::vector<bool> &mask, Complex q_on_omega, double h);

/// Trapezoid quadrature weights: 1/2 at t_0, 1 elsewhere.
RealVector QuadratureWeights(const GridSpec &grid);

/// Finite difference matrix of -y'' + q y with the ghost-point Robin row at
/// t_0 and Dirichlet at x_max, written in the Euclidean coordinates
/// z_k = sqrt(step * w_k) y_k where it is a symmetric stencil. No validation.
Matrix FiniteDifferenceMatrix(const GridSpec &grid, const Vector &q_values, double h);

/// Grid function y -> Euclidean coordinates z (and back).
Vector ToEuclidean(const GridSpec &grid, const Vector &y);
Vector FromEuclidean(const GridSpec &grid, const Vector &z);

/// Nodes of the operator domain: every node except the non-Omega nodes within
/// two steps of Omega, so the stencil never couples D_S to D_N.
std::vector<bool> DomainNodes(const std::vector<bool> &omega_mask);

/// Discretized operator in the Euclidean Krein space (J = I); must classify
/// as dissipative (or symmetric when Im q vanishes).
OperatorWithDomain Discretize(const GridSpec &grid, const PotentialSpec &pot);

/// D_S = functions off Omega, D_N = functions on Omega. Throws
/// InvariantViolation if this differs from Split(t) by more than 1e-8.
Splitting SplitByMask(const OperatorWithDomain &t, const std::vector<bool> &omega_mask);

/// max over samples of |gamma_T[x] - 2 sum_Omega Im q |y_k|^2 step w_k| / ||x||^2
/// for random grid functions y in the domain.
double GammaCheck(const OperatorWithDomain &t, const GridSpec &grid, const PotentialSpec &pot,
                  int samples, std::uint64_t seed = 0);

/// Largest singular value of (L - i)(L + i)^{-1}; throws NotDissipative when
/// L + i is singular.
double CayleyNorm(const Matrix &l);
double CayleyNorm(Complex l);
/// CayleyNorm of the principal Omega block of the Euclidean matrix.
double CayleyNormOmega(const Matrix &l, const std::vector<bool> &omega_mask);

struct SLStudyRow
{
  int level = 0;
  Index n_points = 0;
  double x_max = 0.0;
  double cayley_norm = 0.0;
  double gamma_residual = 0.0;
};

struct StudyOptions
{
  GridSpec base;
  double omega_lo = 0.0;
  double omega_hi = 0.5;
  double imq = 1.0;
  double h = 1.0;
  int levels = 4;
  std::uint64_t seed = 0;
};

/// Doubles n_points per level with x_max fixed.
std::vector<SLStudyRow> ConvergenceStudy(const StudyOptions &opts);

/// Bound (<= 1 + 1e-10) and monotonicity (within 1e-6) of the norms.
bool TrendOk(const std::vector<SLStudyRow> &rows);

void WriteCsv(std::ostream &os, const std::vector<SLStudyRow> &rows);

}  // namespace kreinlab::sl

#endif  // KREINLAB_STURM_LIOUVILLE_HPP
