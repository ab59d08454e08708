#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orderlab/cli.hpp"
#include "orderlab/harness.hpp"

namespace py = pybind11;
using namespace orderlab;

namespace {

ElementSet to_set(const Poset& p, const std::vector<std::size_t>& xs) {
  Mask m = 0;
  for (auto x : xs) {
    if (x >= p.size()) throw IndexOutOfRange("element " + std::to_string(x) + " outside poset of size " + std::to_string(p.size()));
    m |= bit(x);
  }
  return p.set(m);
}

std::vector<std::vector<std::size_t>> opens_list(const Topology& t) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& o : t.opens()) out.push_back(o.indices());
  return out;
}

}  // namespace

PYBIND11_MODULE(_orderlab, m) {
  m.doc() = "Approximation operators, topologies and closure theory on finite posets";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "OrderlabError", PyExc_ValueError);

  py::class_<Poset>(m, "Poset")
      .def_property_readonly("size", &Poset::size)
      .def("leq", &Poset::leq)
      .def("to_json", [](const Poset& p) { return poset_to_json(p).dump(); })
      .def("hasse", &hasse)
      .def("to_dot", [](const Poset& p) { return export_dot(p); })
      .def("__len__", &Poset::size)
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

  py::class_<AuxRelation>(m, "AuxRelation")
      .def_property_readonly("poset", &AuxRelation::poset)
      .def("pairs", &AuxRelation::pairs)
      .def("relates", &AuxRelation::relates)
      .def("to_json", [](const AuxRelation& r) { return relation_to_json(r).dump(); })
      .def("__eq__", [](const AuxRelation& a, const AuxRelation& b) { return a == b; });

  m.def("poset_from_json", [](const std::string& text) { return poset_from_json(Json::parse(text)); });
  m.def("relation_from_json",
        [](const Poset& p, const std::string& text) { return relation_from_json(p, Json::parse(text)); });
  m.def("chain", &chain);
  m.def("antichain", &antichain);
  m.def("diamond", &diamond);
  m.def("boolean", [](std::size_t k) { return generate(PosetKind::boolean(k)); });
  m.def("random_poset", [](std::uint64_t seed, std::size_t n, double p) { return generate(PosetKind::random(seed, n, p)); });
  m.def("enumerate_posets", [](std::size_t n, bool iso) { return enumerate_posets(n, iso); }, py::arg("n"),
        py::arg("up_to_iso") = false);

  m.def("validate_aux", &validate_aux);
  m.def("order_relation", &order_relation);
  m.def("bottom_relation", &bottom_relation);
  m.def("way_below", [](const Poset& p) { return way_below(p); });
  m.def("enumerate_aux", [](const Poset& p) { return enumerate_aux(p); });
  m.def("classify", [](const AuxRelation& r) {
    const auto c = classify(r);
    py::dict d;
    d["pre_approximating"] = c.pre_approximating;
    d["approximating"] = c.approximating;
    d["int"] = c.has_int;
    return d;
  });

  m.def("lap", [](const AuxRelation& r, const std::vector<std::size_t>& a) { return lap(r, to_set(r.poset(), a)).indices(); });
  m.def("uap", [](const AuxRelation& r, const std::vector<std::size_t>& a) { return uap(r, to_set(r.poset(), a)).indices(); });
  m.def("mu_topology", [](const AuxRelation& r) { return opens_list(mu_topology(r)); });
  m.def("scott_topology", [](const Poset& p) { return opens_list(scott_topology(p)); });
  m.def("one_step", [](const Poset& p, const std::vector<std::size_t>& a) { return one_step(p, to_set(p, a)).indices(); });

  m.def("_run_exhaustive", [](std::size_t max_n, const std::vector<std::string>& suites, unsigned jobs) {
    py::gil_scoped_release release;
    return run_suite(Scope::exhaustive(max_n), suites, {jobs, false}).to_json().dump();
  });
  m.def("_search", [](const std::string& property, std::size_t max_n) -> py::object {
    const auto w = search_counterexample(property, Scope::exhaustive(max_n));
    if (!w) return py::none();
    return py::str(Json{{"fingerprint", w->fingerprint}, {"instance", w->instance}}.dump());
  });
  m.def("property_names", &property_names);
  m.def("_replay", [](const std::string& suite, const std::string& fp) { return report_to_json(replay(suite, fp)).dump(); });

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
