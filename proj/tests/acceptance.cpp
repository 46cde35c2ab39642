// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "kreinlab/completeness.hpp"
#include "kreinlab/ensembles.hpp"
#include "kreinlab/linalg.hpp"
#include "kreinlab/sturm_liouville.hpp"
#include "oracles.hpp"

using namespace kreinlab;
using Clock = std::chrono::steady_clock;

namespace
{

constexpr double kTol = 1e-8;
constexpr int kPerDim = 100;
constexpr int kPairs = 200;
constexpr double kBatchBudget = 60.0;
constexpr double kStudyBudget = 120.0;

double Seconds(Clock::time_point since)
{
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// [x,Ty] - [Tx,y] against i (G01 x, G01 y)_E, straight from the definitions.
double GreenResidual(const OperatorWithDomain &t, const BoundaryPair &p, Rng &rng)
{
  const Matrix &q = t.Domain().Basis();
  const Matrix &j = t.Space().J();
  const Matrix &m = t.Mat();
  const Matrix w = Matrix::Identity(t.Dim(), t.Dim()) + m.adjoint() * m;
  double worst = 0.0;
  for (int k = 0; k < kPairs; ++k)
  {
    const Vector a = RandomGaussianVector(q.cols(), rng);
    const Vector b = RandomGaussianVector(q.cols(), rng);
    const Vector x = q * a;
    const Vector y = q * b;
    const Complex lhs = x.dot(j * (m * y)) - (m * x).dot(j * y);
    const Complex rhs = kI * (p.gamma01 * a).dot(p.e_gram * (p.gamma01 * b));
    const double nx = std::sqrt(x.dot(w * x).real());
    const double ny = std::sqrt(y.dot(w * y).real());
    worst = std::max(worst, std::abs(lhs - rhs) / (nx * ny));
  }
  return worst;
}

struct Tally
{
  int fails = 0;
  double worst = 0.0;
  void Add(double value, double bound)
  {
    worst = std::max(worst, value);
    fails += value <= bound ? 0 : 1;
  }
};

struct Line
{
  bool ok;
  std::string detail;
};

void Report(int id, const Line &line, bool &all)
{
  std::printf("%s criterion %d: %s\n", line.ok ? "PASS" : "FAIL", id, line.detail.c_str());
  std::fflush(stdout);
  all = all && line.ok;
}

std::string Fmt(const char *format, double a = 0, double b = 0, double c = 0, double d = 0)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

}  // namespace

int main()
{
  Tally green;
  Tally oracle_gap;
  Tally dn_gap;
  int dim_fails = 0;
  int literal_checked = 0;
  Tally f_low;
  Tally f_high;
  Tally riesz;
  Tally eig_value;
  Tally eig_space;
  int eig_fails = 0;
  int engineered = 0;
  int with_real = 0;
  int criterion_true = 0;
  int criterion_agree = 0;
  int instances = 0;
  Tally obt_iso;
  Tally phi_iso;

  double green_time = 0.0;
  const auto start = Clock::now();
  Rng rng(20261015);
  for (Index n : {2, 4, 8, 16, 32, 64})
  {
    for (int k = 0; k < kPerDim; ++k)
    {
      const std::uint64_t seed = std::uint64_t(instances);
      const auto green_start = Clock::now();
      InstanceOptions opts;
      opts.dim = n;
      opts.domain_dim = (k % 4 == 3 && n > 2) ? 1 + Index(rng() % std::uint64_t(n - 1)) : n;
      const Index d = opts.domain_dim;
      opts.real_eigenvalues = (k % 5 == 0 && d > 1) ? std::min<Index>(2, d - 1) : 0;
      const OperatorWithDomain t = RandomDissipative(opts, rng);
      ++instances;

      const Splitting split = Split(t);
      const DeficiencyData defi = DeficiencySpace(split.s, t);
      const BoundaryPair proj = Gamma01Projection(t, split);
      const BoundaryPair res = Gamma01Resolvent(t, defi);

      // 1
      green.Add(std::max(GreenResidual(t, proj, rng), GreenResidual(t, res, rng)), kTol);
      green_time += Seconds(green_start);

      // 2
      const Matrix ap = proj.AmbientMap();
      const Matrix ar = res.AmbientMap();
      oracle_gap.Add(ap.size() == 0 ? 0.0 : linalg::SpectralNorm(ap - ar) / std::max(1.0, linalg::SpectralNorm(ap)),
                     kTol);

      // 3
      dn_gap.Add(GapDistance(DnViaResolvent(t, defi), split.n.Domain()), kTol);
      const Index defect = t.DomainDim() - split.s.DomainDim();
      bool dims_ok = defi.target.Dim() == defect;
      if (t.Domain().IsFull())
      {
        ++literal_checked;
        dims_ok = dims_ok && defi.n_i.Dim() == defect;
      }
      dim_fails += dims_ok ? 0 : 1;

      // 4
      const RieszOperator r = RieszF(t);
      const RealVector ev = linalg::EigHermitian(r.f).values;
      f_low.Add(-ev(0), 1e-10);
      f_high.Add(ev(ev.size() - 1) - 2.0, 1e-10);
      for (int s = 0; s < 50; ++s)
      {
        const Vector c = RandomGaussianVector(r.f.rows(), rng);
        const Vector x = r.basis * c;
        const double gamma = oracle::GammaDirect(t.Space().J(), t.Mat(), x, x).real();
        riesz.Add(std::abs(gamma - (r.sqrt_f * c).squaredNorm()) / c.squaredNorm(), kTol);
      }

      // 5
      const RealEigenvalueReport re = RealEigenvalueCheck(t, split.s, &proj);
      eig_value.Add(re.max_value_mismatch, kTol);
      eig_space.Add(re.max_eigenspace_gap, kTol);
      const bool engineered_ok = Index(re.t_real.size()) >= opts.real_eigenvalues;
      eig_fails += (re.pass && engineered_ok && re.t_real.size() == re.s_real.size()) ? 0 : 1;
      engineered += opts.real_eigenvalues > 0 ? 1 : 0;
      with_real += re.t_real.empty() ? 0 : 1;

      // 6 and 8
      const BoundaryTriple triple = ConstructObt(split.s, seed);
      const RestrictedBoundary rb = RestrictToT(triple, t);
      const CriterionReport cr = EvaluateCriterion(t, split, triple, rb);
      criterion_agree += cr.agree ? 1 : 0;
      criterion_true += (cr.a.ok && cr.b.ok && cr.c.ok) ? 1 : 0;
      obt_iso.Add(IsometryResidual(triple, 100, seed), kTol);
      phi_iso.Add(PhiIsometryResidual(triple, split, rb, 100, seed), kTol);
    }
  }
  const double batch_time = Seconds(start);
  const bool within_budget = green_time <= kBatchBudget;
  bool all = true;

  Report(1,
         {green.fails == 0 && within_budget,
          Fmt("%g instances, max Green residual %.3g (bound 1e-8), time %.1f s (budget %.0f s), ", instances,
              green.worst, green_time, kBatchBudget) +
              Fmt("whole batch incl. criteria 2-6 and 8 %.1f s", batch_time)},
         all);
  Report(2, {oracle_gap.fails == 0, Fmt("max relative distance projection vs resolvent %.3g (bound 1e-8)",
                                        oracle_gap.worst)},
         all);
  Report(3,
         {dn_gap.fails == 0 && dim_fails == 0,
          Fmt("max gap D_N vs resolvent preimage %.3g; defect count mismatches %g "
              "(dim N_i literal on %g full-domain instances, N_i cap R on all)",
              dn_gap.worst, dim_fails, literal_checked)},
         all);
  Report(4,
         {f_low.fails == 0 && f_high.fails == 0 && riesz.fails == 0,
          Fmt("min eig F >= %.3g, max eig F - 2 = %.3g, max |gamma - ||sqrt(F) x||^2| rel %.3g", -f_low.worst,
              f_high.worst, riesz.worst)},
         all);
  Report(5,
         {eig_fails == 0 && eig_value.fails == 0 && eig_space.fails == 0 && engineered >= 20,
          Fmt("%g engineered, %g with real eigenvalues; max value mismatch %.3g, max eigenspace gap %.3g",
              engineered, with_real, eig_value.worst, eig_space.worst)},
         all);

  // 6: equivalence on the batch plus the epsilon family.
  const std::vector<double> eps = {1.0, 1e-2, 1e-4, 1e-6};
  std::vector<double> norms;
  std::vector<double> lows;
  bool eps_agree = true;
  for (double e : eps)
  {
    const CriterionReport cr = CriterionReportFor(EpsilonFamily(6, e));
    norms.push_back(cr.b.norm);
    lows.push_back(cr.a.min_eigenvalue);
    eps_agree = eps_agree && cr.agree;
  }
  bool monotone = true;
  for (std::size_t k = 1; k < eps.size(); ++k)
  {
    monotone = monotone && norms[k] >= norms[k - 1] - 1e-6 && lows[k] <= lows[k - 1] + 1e-6;
  }
  Report(6,
         {criterion_agree == instances && criterion_true == instances && eps_agree && monotone,
          Fmt("agree %g/%g, all-true %g/%g; ", criterion_agree, instances, criterion_true, instances) +
              Fmt("eps norms %.6f %.6f %.6f %.6f; ", norms[0], norms[1], norms[2], norms[3]) +
              Fmt("eps lambda_min %.3g %.3g %.3g %.3g", lows[0], lows[1], lows[2], lows[3])},
         all);

  // 7
  const auto study_start = Clock::now();
  sl::StudyOptions so;
  so.base = sl::GridSpec{20.0, 64};
  so.omega_lo = 0.0;
  so.omega_hi = 0.5;
  so.imq = 1.0;
  so.h = 1.0;
  so.levels = 4;
  const auto rows = sl::ConvergenceStudy(so);
  const double study_time = Seconds(study_start);
  bool bounded = true;
  std::string norms7;
  for (const auto &row : rows)
  {
    bounded = bounded && row.cayley_norm <= 1.0 + 1e-10 && row.gamma_residual <= kTol;
    norms7 += Fmt("%.12f ", row.cayley_norm);
  }
  const bool final_ok = !rows.empty() && rows.back().cayley_norm >= 0.995;
  Report(7,
         {rows.size() >= 4 && bounded && sl::TrendOk(rows) && final_ok && study_time <= kStudyBudget,
          "norms " + norms7 + Fmt("(final >= 0.995), time %.1f s (budget %.0f s)", study_time, kStudyBudget)},
         all);

  Report(8,
         {obt_iso.fails == 0 && phi_iso.fails == 0,
          Fmt("max Gamma isometry residual %.3g, max phi isometry residual %.3g (bound 1e-8)", obt_iso.worst,
              phi_iso.worst)},
         all);

  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
