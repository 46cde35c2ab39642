// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// kreinlab: analyze operator instances, evaluate the completeness criterion,
// run the Sturm-Liouville Cayley-norm study.
//
// Exit codes: 0 all checks pass, 1 parse or validation error, 2 check failure.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kreinlab/pipeline.hpp"
#include "kreinlab/sturm_liouville.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace kreinlab;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCheck = 2;

void Emit(const std::string &text, const std::string &path)
{
  if (path.empty())
  {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ParseError(path, "cannot open output file");
  }
  out << text;
}

std::string Dump(const json &doc)
{
  return doc.dump(2) + "\n";
}

int RunAnalyze(const std::string &input, const std::string &output, std::uint64_t seed)
{
  const OperatorWithDomain t = LoadInstance(input).Build();
  const Analysis a = Analyze(t, seed);
  Emit(Dump(ToJson(a)), output);
  if (!a.Ok())
  {
    std::cerr << "kreinlab analyze: " << a.finding << "\n";
    return kExitCheck;
  }
  return kExitOk;
}

// One criterion row; dissipativity failures become a finding, not an exception.
json CriterionRow(const std::string &path, std::uint64_t seed, bool &ok)
{
  const OperatorWithDomain t = LoadInstance(path).Build();
  json row;
  row["file"] = fs::path(path).filename().string();
  const Classification c = Classify(t);
  row["classification"] = std::string(ToString(c));
  if (c == Classification::kNeither)
  {
    row["finding"] = "not dissipative";
    ok = false;
    return row;
  }
  const CriterionReport r = CriterionReportFor(t, seed);
  row["criterion"] = ToJson(r);
  ok = r.agree;
  return row;
}

bool NonDecreasing(const std::vector<double> &v)
{
  for (std::size_t k = 1; k < v.size(); ++k)
  {
    if (v[k] < v[k - 1] - 1e-6)
    {
      return false;
    }
  }
  return true;
}

int RunCriterion(const std::string &input, const std::string &output, std::uint64_t seed)
{
  if (!fs::is_directory(input))
  {
    bool ok = true;
    json row = CriterionRow(input, seed, ok);
    row["seed"] = seed;
    Emit(Dump(row), output);
    return ok ? kExitOk : kExitCheck;
  }
  std::vector<std::string> files;
  for (const auto &entry : fs::directory_iterator(input))
  {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
    {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  json rows = json::array();
  std::vector<double> norms;
  std::vector<double> min_eigs;
  bool all_ok = true;
  for (const auto &f : files)
  {
    bool ok = true;
    json row = CriterionRow(f, seed, ok);
    all_ok = all_ok && ok;
    if (row.contains("criterion"))
    {
      norms.push_back(row["criterion"]["cond_b"]["norm"].get<double>());
      min_eigs.push_back(row["criterion"]["cond_a"]["min_eigenvalue"].get<double>());
    }
    rows.push_back(std::move(row));
  }
  std::vector<double> neg_eigs(min_eigs.size());
  std::transform(min_eigs.begin(), min_eigs.end(), neg_eigs.begin(), [](double x) { return -x; });
  json doc;
  doc["seed"] = seed;
  doc["rows"] = std::move(rows);
  doc["trend"] = {{"files", files.size()},
                  {"all_agree", all_ok},
                  {"cond_b_norms", norms},
                  {"cond_a_min_eigenvalues", min_eigs},
                  {"cond_b_non_decreasing", NonDecreasing(norms)},
                  {"cond_a_non_increasing", NonDecreasing(neg_eigs)}};
  Emit(Dump(doc), output);
  return all_ok ? kExitOk : kExitCheck;
}

std::pair<double, double> ParseOmega(const std::string &text)
{
  const auto colon = text.find(':');
  if (colon == std::string::npos)
  {
    throw ValidationError("--omega: expected lo:hi fractions of x_max");
  }
  try
  {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    const double a = std::stod(lo, &used_lo);
    const double b = std::stod(hi, &used_hi);
    if (used_lo != lo.size() || used_hi != hi.size())
    {
      throw std::invalid_argument(text);
    }
    return {a, b};
  }
  catch (const std::logic_error &)
  {
    throw ValidationError("--omega: cannot parse '" + text + "'");
  }
}

int RunStudy(const sl::StudyOptions &opts, const std::string &output)
{
  const auto rows = sl::ConvergenceStudy(opts);
  std::ostringstream csv;
  sl::WriteCsv(csv, rows);
  Emit(csv.str(), output);
  if (!sl::TrendOk(rows))
  {
    std::cerr << "kreinlab sl-study: Cayley norms violate the bound or the monotone trend\n";
    return kExitCheck;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Dissipative operators in Krein spaces: boundary pairs and completeness checks"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::uint64_t seed = 0;

  auto *analyze = app.add_subcommand("analyze", "Full report for one instance");
  analyze->add_option("input", input, "Instance JSON")->required();
  analyze->add_option("-o,--output", output, "Report path (default stdout)");
  analyze->add_option("--seed", seed, "Seed for sampled residuals");

  auto *criterion = app.add_subcommand("criterion", "Completeness criterion for a file or a directory");
  criterion->add_option("input", input, "Instance JSON or directory of them")->required();
  criterion->add_option("-o,--output", output, "Report path (default stdout)");
  criterion->add_option("--seed", seed, "Seed for sampled residuals");

  sl::StudyOptions study;
  std::string omega = "0:0.5";
  auto *sl_study = app.add_subcommand("sl-study", "Cayley-norm refinement study");
  // --h is the Robin parameter, so help stays long-form only here.
  sl_study->set_help_flag("--help", "Print this help message and exit");
  sl_study->add_option("--n", study.base.n_points, "Grid points at level 0")->capture_default_str();
  sl_study->add_option("--xmax", study.base.x_max, "Truncation point")->capture_default_str();
  sl_study->add_option("--levels", study.levels, "Refinement levels")->capture_default_str();
  sl_study->add_option("--omega", omega, "Omega as lo:hi fractions of xmax")->capture_default_str();
  sl_study->add_option("--h", study.h, "Robin parameter")->capture_default_str();
  sl_study->add_option("--imq", study.imq, "Im q on Omega")->capture_default_str();
  sl_study->add_option("--seed", study.seed, "Seed for sampled residuals")->capture_default_str();
  sl_study->add_option("-o,--output", output, "CSV path (default stdout)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try
  {
    if (analyze->parsed())
    {
      return RunAnalyze(input, output, seed);
    }
    if (criterion->parsed())
    {
      return RunCriterion(input, output, seed);
    }
    std::tie(study.omega_lo, study.omega_hi) = ParseOmega(omega);
    return RunStudy(study, output);
  }
  catch (const ParseError &e)
  {
    std::cerr << "kreinlab: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  catch (const ValidationError &e)
  {
    std::cerr << "kreinlab: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  catch (const DimensionMismatch &e)
  {
    std::cerr << "kreinlab: invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  catch (const Error &e)
  {
    std::cerr << "kreinlab: check failed: " << e.what() << "\n";
    return kExitCheck;
  }
}
