// Python bindings for the pentagon library. Tables cross the boundary as
// plain lists; verdict witnesses become tuples or None.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "pentagon/constructions.hpp"
#include "pentagon/corpus.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/group.hpp"
#include "pentagon/group_solution.hpp"
#include "pentagon/io.hpp"
#include "pentagon/pairmap.hpp"

namespace py = pybind11;
using namespace pentagon;

namespace {

using TripleTuple = std::tuple<element_t, element_t, element_t>;

std::optional<TripleTuple> witness_of(const Check& c) {
  if (c.ok) return std::nullopt;
  return TripleTuple{c.witness->x, c.witness->y, c.witness->z};
}

std::vector<std::vector<element_t>> as_rows(int n, const std::vector<element_t>& flat) {
  std::vector<std::vector<element_t>> rows(n);
  for (int r = 0; r < n; ++r)
    rows[r].assign(flat.begin() + static_cast<std::size_t>(r) * n,
                   flat.begin() + static_cast<std::size_t>(r + 1) * n);
  return rows;
}

py::dict profile_dict(const SolutionProfile& p) {
  py::dict d;
  d["solution"] = p.is_solution;
  d["reversed"] = p.is_reversed;
  d["invertible"] = p.is_invertible;
  d["commutative"] = p.is_commutative;
  d["cocommutative"] = p.is_cocommutative;
  return d;
}

Group group_from_rows(int n, const std::vector<std::vector<element_t>>& rows,
                      const std::string& name) {
  return group_from_magma(validate_magma(n, rows, name));
}

GroupSolution wrap(const PairMap& s, const Group& g) {
  return theta_from_pairmap(s, g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Set-theoretical solutions of the pentagon equation on finite sets";

  py::register_exception<error>(m, "PentagonError");

  py::class_<Group>(m, "Group")
      .def_property_readonly("n", &Group::order)
      .def_property_readonly("name", [](const Group& g) { return g.magma.name; })
      .def_readonly("identity", &Group::identity)
      .def("op", &Group::op)
      .def("inv", &Group::inv)
      .def_property_readonly(
          "table", [](const Group& g) { return as_rows(g.order(), g.magma.table); })
      .def("__repr__", [](const Group& g) {
        return "Group(" + (g.magma.name.empty() ? "n=" + std::to_string(g.order())
                                                : g.magma.name) + ")";
      });

  py::class_<PairMap>(m, "PairMap")
      .def(py::init([](int n, const std::vector<std::vector<element_t>>& dot,
                       const std::vector<std::vector<element_t>>& star,
                       const std::string& name) {
             return make_pairmap(n, dot, star, name);
           }),
           py::arg("n"), py::arg("dot"), py::arg("star"), py::arg("name") = "")
      .def_readonly("n", &PairMap::n)
      .def_readwrite("name", &PairMap::name)
      .def("dot", &PairMap::dot)
      .def("star", &PairMap::star)
      .def_property_readonly(
          "dot_rows", [](const PairMap& s) { return as_rows(s.n, s.dot_table); })
      .def_property_readonly(
          "star_rows", [](const PairMap& s) { return as_rows(s.n, s.star_table); })
      .def("__call__",
           [](const PairMap& s, element_t x, element_t y) {
             return std::make_pair(s.dot(x, y), s.star(x, y));
           })
      .def("__eq__", [](const PairMap& a, const PairMap& b) { return a == b; })
      .def("__lt__", [](const PairMap& a, const PairMap& b) { return a < b; })
      .def("__hash__",
           [](const PairMap& s) { return py::hash(py::str(io::to_string(s))); })
      .def("__repr__", [](const PairMap& s) {
        return "PairMap(" + (s.name.empty() ? "n=" + std::to_string(s.n) : s.name) +
               ")";
      });

  // construction and parsing
  m.def("group_by_name", &group_by_name, py::arg("name"));
  m.def("group_from_table", &group_from_rows, py::arg("n"), py::arg("rows"),
        py::arg("name") = "");
  m.def("corpus", &corpus_order_le_8);
  m.def("loads_group",
        [](const std::string& text) {
          std::istringstream in(text);
          return group_from_magma(io::read_magma(in));
        });
  m.def("dumps_group", [](const Group& g) {
    std::ostringstream out;
    io::write_group(out, g);
    return out.str();
  });
  m.def("loads_pairmap", [](const std::string& text) {
    std::istringstream in(text);
    return io::read_pairmap(in);
  });
  m.def("dumps_pairmap", [](const PairMap& s) { return io::to_string(s); });

  m.def("identity_pairmap", &identity_pairmap);
  m.def("flip_pairmap", &flip_pairmap);
  m.def("kac_takesaki_s", &kac_takesaki_s);
  m.def("kac_takesaki_t", &kac_takesaki_t);
  m.def("sign_solution", &sign_solution, py::arg("degree"));
  m.def("coset_solution",
        [](const Group& g, const std::vector<element_t>& k_elements,
           const std::vector<element_t>& reps) {
          return coset_solution(g, subgroup_from_elements(g, k_elements), reps)
              .pairmap();
        },
        py::arg("group"), py::arg("kernel"), py::arg("reps"));

  // verdicts
  m.def("is_solution", [](const PairMap& s) { return is_solution_direct(s).ok; });
  m.def("is_reversed", [](const PairMap& s) { return is_reversed_solution(s).ok; });
  m.def("solution_witness",
        [](const PairMap& s) { return witness_of(is_solution_direct(s)); });
  m.def("profile", [](const PairMap& s) { return profile_dict(profile(s)); });
  m.def("tau_conjugate", &tau_conjugate);
  m.def("is_invertible", &is_invertible);
  m.def("opposite", &opposite);
  m.def("are_equivalent", &are_equivalent, py::arg("s"), py::arg("r"),
        py::arg("budget") = 0);

  // structure theorem
  m.def("decompose",
        [](const PairMap& s, const Group& g) {
          CosetDatum d = decompose(wrap(s, g));
          return std::make_pair(d.K.elements, d.R);
        },
        py::arg("s"), py::arg("group"),
        "Kernel elements and coset representatives of a group solution.");
  m.def("theta_one",
        [](const PairMap& s, const Group& g) { return theta_one(wrap(s, g)); },
        py::arg("s"), py::arg("group"));

  // enumeration
  m.def("enumerate_on_group",
        [](const Group& g, std::uint64_t budget, int workers) {
          return enumerate_on_group(g, budget, workers).solutions;
        },
        py::arg("group"), py::arg("budget") = 0, py::arg("workers") = 1);
  m.def("enumerate_by_theorem",
        [](const Group& g) { return enumerate_by_theorem(g).solutions; },
        py::arg("group"));
  m.def("count_by_formula", &count_by_formula, py::arg("group"));
  m.def("classify",
        [](const std::vector<PairMap>& solutions, std::uint64_t budget,
           std::uint64_t seed) {
          Classification c = classify_solutions(solutions, budget, seed);
          return std::make_pair(c.class_of, c.representatives);
        },
        py::arg("solutions"), py::arg("budget") = 0, py::arg("seed") = 0,
        "Class label per solution plus the least member of each class.");
}
