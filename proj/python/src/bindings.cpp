// Python module opgraph._core. Structured results cross the boundary as the
// same JSON documents the CLI prints, decoded into dicts; exact values that
// the caller is likely to compute with come back as fractions.Fraction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opgraph/bounds.hpp"
#include "opgraph/enumerate.hpp"
#include "opgraph/errors.hpp"
#include "opgraph/generators.hpp"
#include "opgraph/io.hpp"
#include "opgraph/metrics.hpp"
#include "opgraph/witness.hpp"

namespace py = pybind11;

namespace {

using EdgeVec = std::vector<std::pair<int, int>>;

py::object to_python(const opg::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const opg::Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
}

opg::Graph make_graph(int n, const EdgeVec& edges) { return opg::build_graph(n, edges); }

py::dict metrics(int n, const EdgeVec& edges) {
  opg::MetricsReport m = opg::global_metrics(make_graph(n, edges));
  py::dict d;
  d["transmission"] = m.transmission;
  d["eccentricity"] = m.eccentricity;
  d["proximity"] = fraction(m.proximity);
  d["remoteness"] = fraction(m.remoteness);
  d["radius"] = m.radius;
  d["diameter"] = m.diameter;
  d["medians"] = m.medians;
  d["centers"] = m.centers;
  return d;
}

py::object bound(const std::string& which, int n, std::optional<int> q) {
  auto kind = opg::parse_bound_kind(which);
  if (!kind) throw opg::DomainError("unknown bound '" + which + "'");
  return fraction(opg::evaluate_bound(*kind, n, q).value);
}

py::object generate(const std::string& family, int n, std::optional<int> q) {
  auto f = opg::parse_family(family);
  if (!f) throw opg::DomainError("unknown family '" + family + "'");
  return to_python(opg::generated_json(opg::generate(*f, n, q)));
}

py::object witness(int n, const EdgeVec& edges, const std::string& kind) {
  opg::Graph g = make_graph(n, edges);
  if (kind == "radius") return to_python(opg::certificate_json(opg::radius_witness(g)));
  if (kind == "proximity") return to_python(opg::certificate_json(opg::proximity_witness(g)));
  throw opg::DomainError("unknown witness kind '" + kind + "'");
}

std::uint64_t count(int n, std::optional<int> max_face, bool mops, bool canonical, int workers) {
  opg::EnumerateOptions opts;
  opts.max_face = max_face;
  opts.triangulations_only = mops;
  opts.up_to_symmetry = canonical;
  py::gil_scoped_release release;
  return opg::count_dissections(n, opts, workers);
}

py::object verify(int n, std::optional<int> max_face, bool mops, bool labeled, int radius_cap, int workers) {
  opg::VerifyOptions opts;
  opts.enumeration.max_face = max_face;
  opts.enumeration.triangulations_only = mops;
  opts.enumeration.up_to_symmetry = !labeled;
  opts.radius_cap = radius_cap;
  opts.workers = workers;
  opg::VerificationSummary s;
  {
    py::gil_scoped_release release;
    s = opg::verify_bounds_over(n, opts);
  }
  return to_python(opg::summary_json(s));
}

py::object qn(int n, int workers) {
  opg::QnReport r;
  {
    py::gil_scoped_release release;
    r = opg::estimate_qn(n, workers);
  }
  return to_python(opg::qn_json(r));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance invariants and bound verification for 2-connected outerplanar graphs";

  py::register_exception<opg::Error>(m, "OpgraphError", PyExc_ValueError);

  m.def("metrics", &metrics, py::arg("n"), py::arg("edges"),
        "Transmissions, eccentricities, proximity, remoteness, radius, diameter, medians and centers.");
  m.def("analyze", [](int n, const EdgeVec& edges) {
    return to_python(opg::analyze_graph(make_graph(n, edges), "<python>").document);
  }, py::arg("n"), py::arg("edges"));
  m.def("bound", &bound, py::arg("which"), py::arg("n"), py::arg("q") = std::nullopt,
        "Exact value of prox2c, proxmop, rho or rad as a Fraction.");
  m.def("chordal_radius_interval", [](int diameter) {
    opg::RadiusInterval iv = opg::chordal_radius_interval(diameter);
    return std::make_pair(iv.lo, iv.hi);
  }, py::arg("diameter"));
  m.def("generate", &generate, py::arg("family"), py::arg("n"), py::arg("q") = std::nullopt);
  m.def("witness", &witness, py::arg("n"), py::arg("edges"), py::arg("kind") = "proximity");
  m.def("count_dissections", &count, py::arg("n"), py::arg("max_face") = std::nullopt, py::arg("mops") = false,
        py::arg("canonical") = false, py::arg("workers") = 1);
  m.def("verify", &verify, py::arg("n"), py::arg("max_face") = std::nullopt, py::arg("mops") = false,
        py::arg("labeled") = false, py::arg("radius_cap") = 14, py::arg("workers") = 1);
  m.def("qn", &qn, py::arg("n"), py::arg("workers") = 1);
}
