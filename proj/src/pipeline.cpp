// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "kreinlab/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "kreinlab/linalg.hpp"
#include "kreinlab/random.hpp"

namespace kreinlab
{

using nlohmann::json;

namespace
{

constexpr int kPairSamples = 200;
constexpr int kIsometrySamples = 100;
constexpr double kCheckTol = 1e-8;

Complex ParseEntry(const json &v, const std::string &where)
{
  if (v.is_number())
  {
    return {v.get<double>(), 0.0};
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
  {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError(where, "expected a number or an [re, im] pair");
}

Matrix ParseMatrix(const json &v, const std::string &where, Index rows, Index cols)
{
  if (!v.is_array() || Index(v.size()) != rows)
  {
    throw ParseError(where, "expected an array of " + std::to_string(rows) + " rows");
  }
  Matrix out(rows, cols);
  for (Index r = 0; r < rows; ++r)
  {
    const json &row = v[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || Index(row.size()) != cols)
    {
      throw ParseError(rw, "expected " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c)
    {
      out(r, c) = ParseEntry(row[c], rw + "[" + std::to_string(c) + "]");
    }
  }
  return out;
}

json EncodeComplex(Complex z)
{
  return json::array({z.real(), z.imag()});
}

json EncodeMatrix(const Matrix &m)
{
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r)
  {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
    {
      row.push_back(EncodeComplex(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

OperatorWithDomain InstanceSpec::Build() const
{
  KreinSpace space = [&] {
    try
    {
      return KreinSpace(j, tol);
    }
    catch (const Error &e)
    {
      throw ParseError("J", e.what());
    }
  }();
  if (!domain)
  {
    return OperatorWithDomain(std::move(space), t, Subspace::Full(dim, tol));
  }
  const Subspace d = Subspace::Span(*domain, tol);
  if (d.IsZero())
  {
    throw ParseError("domain", "basis vectors span the zero subspace");
  }
  return OperatorWithDomain(std::move(space), t, d);
}

InstanceSpec ParseInstance(const json &doc)
{
  if (!doc.is_object())
  {
    throw ParseError("<root>", "expected a JSON object");
  }
  InstanceSpec parsed;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
  {
    throw ParseError("dim", "expected a positive integer");
  }
  parsed.dim = doc["dim"].get<Index>();
  for (const char *key : {"J", "T"})
  {
    if (!doc.contains(key))
    {
      throw ParseError(key, "missing field");
    }
  }
  parsed.j = ParseMatrix(doc["J"], "J", parsed.dim, parsed.dim);
  parsed.t = ParseMatrix(doc["T"], "T", parsed.dim, parsed.dim);
  if (doc.contains("tol"))
  {
    if (!doc["tol"].is_number() || !(doc["tol"].get<double>() > 0.0))
    {
      throw ParseError("tol", "expected a positive number");
    }
    parsed.tol = doc["tol"].get<double>();
  }
  if (doc.contains("domain"))
  {
    const json &d = doc["domain"];
    if (!d.is_array() || d.empty())
    {
      throw ParseError("domain", "expected a non-empty list of basis vectors");
    }
    // Listed as vectors, stored as columns.
    parsed.domain = ParseMatrix(d, "domain", Index(d.size()), parsed.dim).transpose();
  }
  const auto finite = [](const Matrix &m) { return m.allFinite(); };
  if (!finite(parsed.j) || !finite(parsed.t) || (parsed.domain && !finite(*parsed.domain)))
  {
    throw ParseError("<root>", "non-finite matrix entry");
  }
  return parsed;
}

InstanceSpec ParseInstanceText(const std::string &text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    throw ParseError("syntax", e.what());
  }
  return ParseInstance(doc);
}

InstanceSpec LoadInstance(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError(path, "cannot open file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try
  {
    return ParseInstanceText(buf.str());
  }
  catch (const ParseError &e)
  {
    throw ParseError(path + ": " + e.Where(), std::string(e.what()).substr(e.Where().size() + 2));
  }
}

json InstanceToJson(const OperatorWithDomain &t)
{
  json doc;
  doc["dim"] = t.Dim();
  doc["J"] = EncodeMatrix(t.Space().J());
  doc["T"] = EncodeMatrix(t.Mat());
  if (!t.Domain().IsFull())
  {
    doc["domain"] = EncodeMatrix(t.Domain().Basis().transpose());
  }
  return doc;
}

RieszSummary RieszCheck(const OperatorWithDomain &t, int samples, std::uint64_t seed)
{
  const RieszOperator r = RieszF(t);
  RieszSummary out;
  if (r.f.rows() == 0)
  {
    return out;
  }
  out.f_min_eigenvalue = linalg::EigHermitian(r.f).values(0);
  out.f_norm = linalg::SpectralNorm(r.f);
  Rng rng(seed);
  for (int k = 0; k < samples; ++k)
  {
    const Vector c = RandomGaussianVector(r.f.rows(), rng);
    const Vector x = r.basis * c;
    // Basis is <.,.>_T-orthonormal, so ||x||_T = ||c||.
    const double lhs = GammaForm(t, x, x).real();
    const double rhs = (r.sqrt_f * c).squaredNorm();
    out.identity_residual = std::max(out.identity_residual, std::abs(lhs - rhs) / c.squaredNorm());
  }
  return out;
}

bool Analysis::Ok() const
{
  return std::all_of(checks.begin(), checks.end(), [](const auto &kv) { return kv.second; });
}

Analysis Analyze(const OperatorWithDomain &t, std::uint64_t seed)
{
  Analysis a;
  a.seed = seed;
  a.classification = Classify(t);
  a.dims["D_T"] = t.DomainDim();
  a.checks["classification_consistent"] = a.classification == ClassifyViaGraph(t);
  a.checks["dissipative"] = a.classification != Classification::kNeither;
  if (a.classification == Classification::kNeither)
  {
    a.finding = "not dissipative";
    return a;
  }

  const Splitting split = Split(t);
  const DeficiencyData defi = DeficiencySpace(split.s, t);
  const Subspace dn_res = DnViaResolvent(t, defi);
  a.dims["D_S"] = split.s.DomainDim();
  a.dims["D_N"] = split.n.DomainDim();
  a.dims["N_i"] = defi.n_i.Dim();
  a.dims["N_i_cap_R"] = defi.target.Dim();

  const BoundaryPair projection = Gamma01Projection(t, split);
  const BoundaryPair resolvent = Gamma01Resolvent(t, defi);
  a.dims["E"] = projection.EDim();
  const BoundaryTriple triple = ConstructObt(split.s, seed);
  const RestrictedBoundary rb = RestrictToT(triple, t);
  a.dims["boundary"] = triple.boundary_dim;
  a.dims["L_T"] = rb.lt.Dim();

  auto &res = a.residuals;
  res["green_bvs2"] = GreenResidualPair(projection, t, kPairSamples, seed);
  res["green_bvs2_resolvent"] = GreenResidualPair(resolvent, t, kPairSamples, seed);
  res["green_bvs3"] = GreenResidualBoundary(rb, t, kPairSamples, seed);
  res["green_obt"] = triple.green_residual;
  res["gamma_isometry"] = IsometryResidual(triple, kIsometrySamples, seed);
  res["phi_isometry"] = PhiIsometryResidual(triple, split, rb, kIsometrySamples, seed);
  res["gamma01_oracle_gap"] = PairGap(projection, resolvent);
  res["dn_resolvent_gap"] = GapDistance(dn_res, split.n.Domain());

  a.riesz = RieszCheck(t, kPairSamples, seed);
  a.criterion = EvaluateCriterion(t, split, triple, rb);
  a.real_eigenvalues = RealEigenvalueCheck(t, split.s, &projection);

  for (const auto &[name, value] : res)
  {
    a.checks[name] = value <= kCheckTol;
  }
  a.checks["deficiency_dim"] = defi.target.Dim() == t.DomainDim() - split.s.DomainDim() &&
                               (!t.Domain().IsFull() || defi.n_i.Dim() == a.dims["D_N"]);
  a.checks["riesz_nonnegative"] = a.riesz.f_min_eigenvalue >= -kDefaultTol;
  a.checks["riesz_bound"] = a.riesz.f_norm <= 2.0 + kDefaultTol;
  a.checks["riesz_identity"] = a.riesz.identity_residual <= kCheckTol;
  a.checks["criterion_agree"] = a.criterion->agree;
  a.checks["real_eigenvalues"] = a.real_eigenvalues->pass;
  if (!a.Ok())
  {
    a.finding = "invariant check failed";
  }
  return a;
}

json ToJson(const CriterionReport &r)
{
  json out;
  out["cond_a"] = {{"ok", r.a.ok},
                   {"min_eigenvalue", r.a.min_eigenvalue},
                   {"max_eigenvalue", r.a.max_eigenvalue}};
  out["cond_b"] = {{"ok", r.b.ok}, {"norm", r.b.norm}};
  out["cond_c"] = {{"ok", r.c.ok},
                   {"gap_range_sum", r.c.gap_range_sum},
                   {"gap_theta_sum", r.c.gap_theta_sum}};
  out["agree"] = r.agree;
  out["boundary_dim"] = r.boundary_dim;
  out["lt_dim"] = r.lt_dim;
  return out;
}

json ToJson(const Analysis &a)
{
  json out;
  out["seed"] = a.seed;
  out["classification"] = std::string(ToString(a.classification));
  out["dims"] = a.dims;
  out["residuals"] = a.residuals;
  out["checks"] = a.checks;
  out["ok"] = a.Ok();
  if (!a.finding.empty())
  {
    out["finding"] = a.finding;
  }
  if (a.criterion)
  {
    out["criterion"] = ToJson(*a.criterion);
    out["riesz"] = {{"f_min_eigenvalue", a.riesz.f_min_eigenvalue},
                    {"f_norm", a.riesz.f_norm},
                    {"identity_residual", a.riesz.identity_residual}};
  }
  if (a.real_eigenvalues)
  {
    const RealEigenvalueReport &r = *a.real_eigenvalues;
    json eig;
    eig["t_real"] = r.t_real;
    eig["s_real"] = r.s_real;
    eig["max_value_mismatch"] = r.max_value_mismatch;
    eig["max_eigenspace_gap"] = r.max_eigenspace_gap;
    eig["max_identity_residual"] = r.max_identity_residual;
    eig["pass"] = r.pass;
    out["real_eigenvalues"] = std::move(eig);
  }
  return out;
}

}  // namespace kreinlab
