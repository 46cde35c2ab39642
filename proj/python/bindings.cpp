// Copyright kreinlab contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kreinlab/ensembles.hpp"
#include "kreinlab/pipeline.hpp"
#include "kreinlab/sturm_liouville.hpp"

namespace py = pybind11;
using namespace kreinlab;

namespace
{

// Reports cross the boundary as JSON text; the Python side decodes them.
OperatorWithDomain MakeInstance(const Matrix &j, const Matrix &t, const std::optional<Matrix> &domain, double tol)
{
  InstanceSpec parsed;
  parsed.dim = t.rows();
  parsed.j = j;
  parsed.t = t;
  parsed.domain = domain;
  parsed.tol = tol;
  return parsed.Build();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Dissipative operators in finite-dimensional Krein spaces";

  // Translators run newest first, so the subclass goes second.
  const auto &base = py::register_exception<Error>(m, "KreinError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<OperatorWithDomain>(m, "Instance")
    .def(py::init(&MakeInstance), py::arg("J"), py::arg("T"), py::arg("domain") = std::nullopt,
         py::arg("tol") = kDefaultTol)
    .def_property_readonly("J", [](const OperatorWithDomain &t) { return t.Space().J(); })
    .def_property_readonly("T", &OperatorWithDomain::Mat)
    .def_property_readonly("domain_basis", [](const OperatorWithDomain &t) { return t.Domain().Basis(); })
    .def_property_readonly("dim", &OperatorWithDomain::Dim)
    .def_property_readonly("domain_dim", &OperatorWithDomain::DomainDim)
    .def("to_json", [](const OperatorWithDomain &t) { return InstanceToJson(t).dump(); });

  m.def("load_instance", [](const std::string &path) { return LoadInstance(path).Build(); }, py::arg("path"));
  m.def("parse_instance", [](const std::string &text) { return ParseInstanceText(text).Build(); },
        py::arg("text"));

  m.def("classify", [](const OperatorWithDomain &t) { return std::string(ToString(Classify(t))); });
  m.def("gamma_gram", &GammaGram, "Gram matrix of gamma_T on the domain basis");
  m.def(
    "riesz_f",
    [](const OperatorWithDomain &t) {
      const RieszOperator r = RieszF(t);
      return py::make_tuple(r.basis, r.f, r.sqrt_f);
    },
    "(basis, F, sqrt(F)) with F in graph-orthonormal coordinates");

  m.def("analyze_json", [](const OperatorWithDomain &t, std::uint64_t seed) { return ToJson(Analyze(t, seed)).dump(); },
        py::arg("instance"), py::arg("seed") = 0);
  m.def(
    "criterion_json",
    [](const OperatorWithDomain &t, std::uint64_t seed) { return ToJson(CriterionReportFor(t, seed)).dump(); },
    py::arg("instance"), py::arg("seed") = 0);

  m.def(
    "random_dissipative",
    [](Index dim, Index domain_dim, Index real_eigenvalues, std::uint64_t seed) {
      Rng rng(seed);
      InstanceOptions opts;
      opts.dim = dim;
      opts.domain_dim = domain_dim;
      opts.real_eigenvalues = real_eigenvalues;
      return RandomDissipative(opts, rng);
    },
    py::arg("dim"), py::arg("domain_dim") = -1, py::arg("real_eigenvalues") = 0, py::arg("seed") = 0);
  m.def("epsilon_family", &EpsilonFamily, py::arg("dim"), py::arg("eps"), py::arg("seed") = 7);

  m.def(
    "sl_study",
    [](Index n_points, double x_max, int levels, double omega_lo, double omega_hi, double h, double imq,
       std::uint64_t seed) {
      sl::StudyOptions so;
      so.base = sl::GridSpec{x_max, n_points};
      so.levels = levels;
      so.omega_lo = omega_lo;
      so.omega_hi = omega_hi;
      so.h = h;
      so.imq = imq;
      so.seed = seed;
      py::list rows;
      for (const sl::SLStudyRow &r : sl::ConvergenceStudy(so))
      {
        py::dict d;
        d["level"] = r.level;
        d["n_points"] = r.n_points;
        d["x_max"] = r.x_max;
        d["cayley_norm"] = r.cayley_norm;
        d["gamma_residual"] = r.gamma_residual;
        rows.append(d);
      }
      return rows;
    },
    py::arg("n_points") = 64, py::arg("x_max") = 20.0, py::arg("levels") = 4, py::arg("omega_lo") = 0.0,
    py::arg("omega_hi") = 0.5, py::arg("h") = 1.0, py::arg("imq") = 1.0, py::arg("seed") = 0);
}
