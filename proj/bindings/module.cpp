#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmon/catalog.hpp"
#include "qmon/errors.hpp"
#include "qmon/homology.hpp"
#include "qmon/monodromy.hpp"
#include "qmon/quandle_json.hpp"
#include "qmon/torus_dehn.hpp"

namespace py = pybind11;
using namespace qmon;

namespace {

py::object big_to_py(const BigInt& v) {
  // exact conversion through the decimal string
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

FiniteQuandle table_arg(const CatalogEntry& e) {
  if (!e.quandle.has_value()) throw StructuralError(e.name + " has no finite table");
  return *e.quandle;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quandles, branched covers, braid monodromy, torus fibrations";

  py::register_exception<StructuralError>(m, "StructuralError");
  py::register_exception<CapacityError>(m, "CapacityError");

  py::class_<FiniteQuandle>(m, "Quandle")
      .def(py::init([](const std::vector<std::vector<int>>& rhd,
                       const std::vector<std::string>& labels) {
             return FiniteQuandle::from_rhd(rhd, labels);
           }),
           py::arg("rhd"), py::arg("labels") = std::vector<std::string>{})
      .def("__len__", &FiniteQuandle::size)
      .def("rhd", &FiniteQuandle::rhd, py::arg("x"), py::arg("y"))
      .def("unrhd", &FiniteQuandle::unrhd, py::arg("x"), py::arg("y"))
      .def("label", &FiniteQuandle::label)
      .def("table", &FiniteQuandle::rhd_rows)
      .def("__eq__", [](const FiniteQuandle& a, const FiniteQuandle& b) { return a == b; })
      .def("to_json", [](const FiniteQuandle& q) { return quandle_to_json(q); })
      .def_static("from_json", [](const std::string& s) { return quandle_from_json(s); });

  m.def("catalog", [](const std::string& spec) { return table_arg(catalog_build(spec)); },
        py::arg("spec"), "build a catalog carrier table");
  m.def("catalog_names", &catalog_names);

  m.def("axioms_ok", [](const FiniteQuandle& q) { return check_axioms(q).passed; });
  m.def(
      "axiom_violations",
      [](const FiniteQuandle& q) {
        auto rep = check_axioms(q);
        std::vector<std::tuple<std::string, std::vector<int>>> out;
        for (const auto& v : rep.violations) {
          std::vector<int> w;
          for (int x : v.witness)
            if (x >= 0) w.push_back(x);
          out.emplace_back(law_name(v.law), w);
        }
        return out;
      },
      "list of (law, witness) pairs");

  m.def("homs", &enumerate_homs, py::arg("source"), py::arg("target"));
  m.def("orbit_count", &orbit_count);
  m.def("achiral_double", &achiral_double);
  m.def("subquandle", &subquandle_generated, py::arg("q"), py::arg("seed"));

  m.def(
      "hurwitz_orbit",
      [](const FiniteQuandle& q, const std::vector<int>& start, size_t max_size) {
        auto o = hurwitz_orbit(q, start, {max_size, false, false});
        return py::make_tuple(o.members, o.truncated);
      },
      py::arg("q"), py::arg("start"), py::arg("max_size") = 10000,
      "(members, truncated) under the elementary moves");
  m.def("hurwitz_move", &hurwitz_move, py::arg("q"), py::arg("tuple"), py::arg("i"),
        py::arg("right") = true);

  m.def(
      "count_colorings",
      [](const FiniteQuandle& q, int m, const std::string& base) {
        BaseSpace b;
        if (base == "disk") b = BaseSpace::Disk;
        else if (base == "sphere") b = BaseSpace::Sphere;
        else throw StructuralError("base must be disk or sphere");
        return count_inner_assignments(q, m, b);
      },
      py::arg("q"), py::arg("length"), py::arg("base") = "sphere");

  m.def(
      "homology",
      [](const FiniteQuandle& q, int degree, const std::string& theory, int bound) {
        ChainTheory th;
        if (theory == "rack") th = ChainTheory::Rack;
        else if (theory == "quandle") th = ChainTheory::Quandle;
        else throw StructuralError("theory must be rack or quandle");
        HomologyOptions opts;
        opts.degree_bound = bound;
        auto h = homology(q, degree, th, opts);
        py::list tor;
        for (const auto& d : h.torsion) tor.append(big_to_py(d));
        return py::make_tuple(h.free_rank, tor, h.str());
      },
      py::arg("q"), py::arg("degree"), py::arg("theory") = "quandle", py::arg("bound") = 4,
      "(free_rank, torsion, pretty) of H_degree");

  py::class_<Slope>(m, "Slope")
      .def_static("parse", &Slope::parse)
      .def_static("make",
                  [](long long x, long long y) { return Slope::make(BigInt(x), BigInt(y)); })
      .def_property_readonly("contractible", &Slope::is_contractible)
      .def("__str__", &Slope::str)
      .def("__repr__", [](const Slope& s) { return "Slope(" + s.str() + ")"; })
      .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
      .def("rhd", &slope_rhd)
      .def("unrhd", &slope_unrhd);

  m.def("slope_rhd", &slope_rhd);
  m.def("slope_unrhd", &slope_unrhd);
  m.def("twist_matrix", [](const Slope& s) {
    SL2 t = twist_matrix(s);
    return py::make_tuple(big_to_py(t.a), big_to_py(t.b), big_to_py(t.c), big_to_py(t.d));
  });

  m.def(
      "validate_file",
      [](const std::string& path, bool simple, bool connected, bool projective, bool achiral) {
        auto t = tuple_from_file(path);
        auto rep = validate(t, {simple, connected, projective, achiral});
        std::vector<std::tuple<std::string, bool, std::string>> checks;
        for (const auto& c : rep.checks) checks.emplace_back(c.name, c.passed, c.detail);
        return py::make_tuple(rep.valid, checks);
      },
      py::arg("path"), py::arg("simple") = false, py::arg("connected") = false,
      py::arg("projective") = false, py::arg("achiral") = false,
      "(valid, [(check, passed, detail)]) for a tuple file");
}
