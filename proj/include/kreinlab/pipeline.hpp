// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef KREINLAB_PIPELINE_HPP
#define KREINLAB_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "kreinlab/completeness.hpp"

namespace kreinlab
{

/// Malformed or invalid instance file; `where` names the field or position.
class ParseError : public Error
{
public:
  ParseError(const std::string &where, const std::string &what)
    : Error(where + ": " + what), where_(where)
  {
  }
  const std::string &Where() const { return where_; }

private:
  std::string where_;
};

struct InstanceSpec
{
  Index dim = 0;
  Matrix j;
  Matrix t;
  std::optional<Matrix> domain;  // columns span D_T
  double tol = kDefaultTol;

  OperatorWithDomain Build() const;
};

/// Reads the instance format; complex entries are [re, im] (plain numbers are
/// taken as real). Throws ParseError with the offending field.
InstanceSpec ParseInstance(const nlohmann::json &doc);
InstanceSpec ParseInstanceText(const std::string &text);
InstanceSpec LoadInstance(const std::string &path);

nlohmann::json InstanceToJson(const OperatorWithDomain &t);

struct RieszSummary
{
  double f_min_eigenvalue = 0.0;
  double f_norm = 0.0;
  double identity_residual = 0.0;  // |gamma_T[x] - ||sqrt(F) x||_T^2| / ||x||_T^2
};
RieszSummary RieszCheck(const OperatorWithDomain &t, int samples, std::uint64_t seed = 0);

/// Everything the report needs; checks maps a check name to pass/fail.
struct Analysis
{
  std::uint64_t seed = 0;
  Classification classification = Classification::kNeither;
  std::map<std::string, Index> dims;
  std::map<std::string, double> residuals;
  RieszSummary riesz;
  std::optional<CriterionReport> criterion;
  std::optional<RealEigenvalueReport> real_eigenvalues;
  std::map<std::string, bool> checks;
  std::string finding;

  bool Ok() const;
};

Analysis Analyze(const OperatorWithDomain &t, std::uint64_t seed = 0);

nlohmann::json ToJson(const CriterionReport &r);
nlohmann::json ToJson(const Analysis &a);

}  // namespace kreinlab

#endif  // KREINLAB_PIPELINE_HPP
