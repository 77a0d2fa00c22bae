#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lpg/dwyer.hpp"
#include "lpg/lcenum.hpp"
#include "lpg/lowx.hpp"
#include "lpg/lpfile.hpp"
#include "lpg/nq.hpp"
#include "lpg/rs.hpp"

namespace py = pybind11;
using namespace lpg;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::dict to_py(const AbelianInvariants& a) {
  py::list torsion;
  for (const auto& t : a.torsion) torsion.append(to_py(t));
  py::dict d;
  d["torsion"] = torsion;
  d["free_rank"] = a.free_rank;
  d["text"] = a.to_string();
  return d;
}

py::list to_py(const std::vector<AbelianInvariants>& v) {
  py::list out;
  for (const auto& a : v) out.append(to_py(a));
  return out;
}

std::vector<FreeWord> words(const LPresentation& L, const std::vector<std::string>& texts) {
  std::vector<FreeWord> out;
  for (const auto& t : texts) out.push_back(parse_word(t, L.alphabet()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_lpgroup, m) {
  m.doc() = "Finitely L-presented groups";

  py::register_exception<LpParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<LPresentation>(m, "LPresentation")
      .def_property_readonly("rank", &LPresentation::rank)
      .def_property_readonly("generators", [](const LPresentation& L) { return L.alphabet().names(); })
      .def_property_readonly("invariant", &LPresentation::invariant)
      .def_property_readonly("ascending", &LPresentation::ascending)
      .def("__str__", [](const LPresentation& L) { return print_lp(L); })
      .def("__eq__", [](const LPresentation& a, const LPresentation& b) { return a == b; });

  m.def("parse", [](const std::string& text) { return parse_lp(text); }, py::arg("text"));
  m.def("grigorchuk", &preset_grigorchuk);
  m.def("gamma", &preset_gamma, py::arg("d"));

  m.def("abelian_invariants", [](const LPresentation& L) { return to_py(abelian_quotient(L)); });

  m.def(
      "lower_central_sections",
      [](const LPresentation& L, int c, double max_seconds) {
        NqBudget b;
        b.max_seconds = max_seconds;
        NilpotentQuotient q;
        {
          py::gil_scoped_release nogil;
          q = nilpotent_quotient(L, c, b);
        }
        py::dict d;
        d["sections"] = to_py(q.sections);
        d["stabilized"] = q.stabilized;
        d["partial"] = q.partial;
        return d;
      },
      py::arg("L"), py::arg("c"), py::arg("max_seconds") = 0.0);

  m.def(
      "maximal_nilpotent_quotient",
      [](const LPresentation& L, int c_max) -> py::object {
        auto q = maximal_nilpotent_detect(L, c_max);
        if (!q) return py::none();
        return to_py(q->sections);
      },
      py::arg("L"), py::arg("c_max"));

  m.def(
      "dwyer_quotients",
      [](const LPresentation& L, int c_max) { return to_py(dwyer_quotients(L, c_max).entries); },
      py::arg("L"), py::arg("c_max"));

  m.def(
      "subgroup_index",
      [](const LPresentation& L, const std::vector<std::string>& gens, int ell_max, std::size_t max_cosets) {
        EnumerationPolicy p;
        p.ell_max = ell_max;
        p.limits.max_cosets = max_cosets;
        auto r = l_enumerate(L, words(L, gens), p);
        py::dict d;
        d["index"] = r.index;
        d["certified"] = r.certified;
        d["ell"] = r.ell_used;
        d["message"] = r.message;
        return d;
      },
      py::arg("L"), py::arg("generators"), py::arg("ell_max") = 8, py::arg("max_cosets") = 1000000);

  m.def(
      "low_index_subgroups",
      [](const LPresentation& L, std::size_t n, bool normal_only) {
        LowIndexResult r;
        {
          py::gil_scoped_release nogil;
          r = normal_only ? normal_subgroups(L, n) : low_index_subgroups(L, n);
        }
        py::list subs;
        for (const auto& s : r.subgroups) {
          py::dict d;
          d["index"] = s.index;
          d["normal"] = s.is_normal;
          d["certified"] = s.certified;
          subs.append(d);
        }
        return subs;
      },
      py::arg("L"), py::arg("n"), py::arg("normal_only") = false);

  m.def(
      "derived_series",
      [](const LPresentation& L, int depth) {
        auto ds = derived_series_sections(L, depth);
        py::dict d;
        d["sections"] = to_py(ds.sections);
        py::list idx;
        for (const auto& x : ds.cumulative_index) idx.append(to_py(x));
        d["cumulative_index"] = idx;
        d["exact"] = ds.exact;
        d["partial"] = ds.partial;
        return d;
      },
      py::arg("L"), py::arg("depth"));
}
