#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vps/apolarity.hpp"
#include "vps/errors.hpp"
#include "vps/grassmann.hpp"
#include "vps/grobner.hpp"
#include "vps/limits.hpp"
#include "vps/reproduce.hpp"
#include "vps/tangent.hpp"
#include "vps/vps.hpp"

namespace py = pybind11;
using namespace vps;

namespace {

std::vector<std::string> strs(const std::vector<Form>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(f.str());
  return out;
}

py::dict hilbert_dict(const HilbFn& h) {
  py::dict d;
  d["values"] = h.values;
  d["eventual"] = h.eventual;
  d["onset"] = h.onset;
  return d;
}

py::dict tangent_dict(const TangentReport& r, const std::optional<WeightVec>& w) {
  py::dict d;
  d["dimension"] = r.dimension;
  d["truncation_degree"] = r.truncation_degree;
  if (w) d["weights"] = torus_weights(r, *w);
  return d;
}

}  // namespace

PYBIND11_MODULE(vps_apolar, m) {
  m.doc() = "Exact apolarity, flat limits and VPS(Q,H) computations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NotLinearlyNormal>(m, "NotLinearlyNormal", domain.ptr());
  py::register_exception<SingularQuadric>(m, "SingularQuadric", base.ptr());
  py::register_exception<UnsupportedQuadric>(m, "UnsupportedQuadric", base.ptr());
  py::register_exception<DegenerateParameters>(m, "DegenerateParameters", base.ptr());
  py::register_exception<BadReduction>(m, "BadReduction", base.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<Unstable>(m, "Unstable", base.ptr());
  py::register_exception<NotPolynomialMap>(m, "NotPolynomialMap", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<GradedIdeal>(m, "Ideal")
      .def_static("parse", &GradedIdeal::parse, py::arg("text"), "Ideal from the ideal file format")
      .def_static(
          "from_strings", [](int n, const std::vector<std::string>& gens) { return GradedIdeal::from_strings(n, gens); },
          py::arg("n"), py::arg("generators"))
      .def_property_readonly("nvars", &GradedIdeal::nvars)
      .def_property_readonly("generators", [](const GradedIdeal& i) { return strs(i.generators()); })
      .def("minimal_generators", [](const GradedIdeal& i, int d) { return strs(i.minimal_generators(d)); }, py::arg("d_max"))
      .def("hilbert", &GradedIdeal::hilbert, py::arg("d"))
      .def("dim", &GradedIdeal::dim, py::arg("d"))
      .def("contains", py::overload_cast<const GradedIdeal&>(&GradedIdeal::contains, py::const_), py::arg("other"))
      .def("equal_up_to", &GradedIdeal::equal_up_to, py::arg("other"), py::arg("d_max"))
      .def("__str__", &GradedIdeal::str);

  py::class_<Quadric>(m, "Quadric")
      .def_static("parse", &Quadric::parse, py::arg("text"), py::arg("n"))
      .def_property_readonly("form", [](const Quadric& q) { return q.form.str(); })
      .def_property_readonly("rank", [](const Quadric& q) { return q.rank; })
      .def_property_readonly("nvars", &Quadric::nvars)
      .def("__str__", [](const Quadric& q) { return q.form.str(); });

  m.def("inverse_quadric", &inverse_quadric, py::arg("q"));
  m.def("apolar_ideal", [](const Quadric& q, int d) { return apolar_ideal(q.form, d); }, py::arg("q"), py::arg("d_max"));
  m.def("saturate", &saturate, py::arg("ideal"));
  m.def("is_saturated", &is_saturated, py::arg("ideal"));
  m.def("intersect", &intersect_ideals, py::arg("a"), py::arg("b"), py::arg("d_max"));
  m.def("hilbert_function", [](const GradedIdeal& i, int d) { return hilbert_dict(hilbert_function(i, d)); }, py::arg("ideal"),
        py::arg("d_max"));
  m.def("weight_limit", &weight_limit, py::arg("ideal"), py::arg("weights"), py::arg("d_max") = -1);
  m.def("macaulay_bound", &macaulay_bound, py::arg("h"), py::arg("d"));

  m.def(
      "check_vps",
      [](const GradedIdeal& i, const Quadric& q) {
        VpsVerdict v = check_vps(i, q);
        py::dict d;
        d["in_vps"] = v.in_vps;
        d["saturated"] = v.saturated;
        d["criteria_apply"] = v.criteria_apply;
        d["sbl_necessary"] = v.sbl_necessary;
        d["kri"] = v.kri;
        d["hilbert"] = hilbert_dict(v.hilbert);
        return d;
      },
      py::arg("ideal"), py::arg("q"));

  m.def(
      "syz_tangent",
      [](const GradedIdeal& i, std::optional<Quadric> q, std::optional<WeightVec> w) {
        return tangent_dict(syz_tangent(i.piece(2), q), w);
      },
      py::arg("ideal"), py::arg("q") = py::none(), py::arg("weights") = py::none());
  m.def(
      "hilb_tangent", [](const GradedIdeal& i, std::optional<WeightVec> w) { return tangent_dict(hilb_tangent(i), w); },
      py::arg("ideal"), py::arg("weights") = py::none());
  m.def("sl2_torus_n4", &sl2_torus_n4);

  m.def(
      "plucker_quadric_count",
      [](int k, int mm, std::uint64_t seed) { return plucker_quadric_space(k, mm, seed).dimension; }, py::arg("k"), py::arg("m"),
      py::arg("seed") = 0);
  m.def(
      "vps_span",
      [](const Quadric& q, std::size_t samples, std::uint64_t seed) {
        SpanReport s = vps_span(q, samples, seed);
        py::dict d;
        d["samples"] = s.sample_count;
        d["projective_dimension"] = s.projective_dimension;
        d["ranks"] = s.ranks;
        d["exact_confirmed"] = s.exact_confirmed;
        return d;
      },
      py::arg("q"), py::arg("samples") = 200, py::arg("seed") = 0);

  m.def("reproduce_ids", &reproduce_ids);
  m.def(
      "reproduce",
      [](const std::string& id, std::uint64_t seed) {
        RunConfig c = RunConfig::from_env();
        c.seed = seed;
        ReproReport r = reproduce(id, c);
        py::list checks;
        for (const auto& ch : r.checks) {
          py::dict d;
          d["name"] = ch.name;
          d["computed"] = ch.computed;
          d["expected"] = ch.expected;
          d["pass"] = ch.pass;
          checks.append(d);
        }
        py::dict d;
        d["id"] = r.id;
        d["status"] = r.status == ReproStatus::Pass ? "pass" : r.status == ReproStatus::Mismatch ? "mismatch" : "unstable";
        d["checks"] = checks;
        d["note"] = r.note;
        return d;
      },
      py::arg("id"), py::arg("seed") = 0);
}
