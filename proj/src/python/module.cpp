#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobstar/corpus.hpp"
#include "frobstar/graded.hpp"
#include "frobstar/group.hpp"
#include "frobstar/semisimple.hpp"

namespace py = pybind11;
using namespace frobstar;

namespace {

Tolerance make_tol(double eps, std::uint64_t seed) {
  Tolerance tol;
  tol.eps_eq = eps;
  tol.eps_rank = eps;
  tol.seed = seed;
  return tol;
}

py::list checks_to_list(const ValidationReport& r) {
  py::list out;
  for (const auto& c : r.checks)
    out.append(py::dict(py::arg("name") = c.name, py::arg("pass") = c.pass,
                        py::arg("measured") = c.measured,
                        py::arg("threshold") = c.threshold));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frobenius star-algebra verification core";

  py::class_<FiniteGroup>(m, "Group")
      .def_readonly("order", &FiniteGroup::order)
      .def_readonly("cayley", &FiniteGroup::cayley)
      .def_readonly("labels", &FiniteGroup::labels)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group of order " + std::to_string(g.order) + ">";
      });

  m.def("group_from_cayley",
        [](std::vector<std::vector<int>> cayley,
           std::vector<std::string> labels) {
          return group_from_cayley(std::move(cayley), std::move(labels));
        },
        py::arg("cayley"), py::arg("labels") = std::vector<std::string>{});
  m.def("group_from_permutations",
        [](const std::vector<std::vector<int>>& gens) {
          return group_from_permutations(gens);
        },
        py::arg("generators"));
  m.def("cyclic", &corpus::cyclic, py::arg("n"));
  m.def("dihedral", &corpus::dihedral, py::arg("n"));
  m.def("dicyclic", &corpus::dicyclic, py::arg("n"));
  m.def("direct_product", &corpus::direct_product);

  m.def(
      "check_axioms",
      [](const FiniteGroup& g, double eps, std::uint64_t seed) {
        Tolerance tol = make_tol(eps, seed);
        return checks_to_list(validate_frobenius_star(group_algebra(g, tol), tol));
      },
      py::arg("group"), py::arg("eps") = 1e-9, py::arg("seed") = 0);

  m.def(
      "character_table",
      [](const FiniteGroup& g, double eps, std::uint64_t seed) {
        Tolerance tol = make_tol(eps, seed);
        auto alg = group_algebra(g, tol);
        py::list rows;
        for (const auto& s : simple_modules(alg, tol))
          rows.append(py::dict(py::arg("degree") = s.dim,
                               py::arg("values") = Vector(s.character)));
        return rows;
      },
      py::arg("group"), py::arg("eps") = 1e-9, py::arg("seed") = 0);

  m.def(
      "character_gram",
      [](const FiniteGroup& g, double eps, std::uint64_t seed) {
        Tolerance tol = make_tol(eps, seed);
        auto alg = group_algebra(g, tol);
        auto simples = simple_modules(alg, tol);
        return Matrix(verify_orthogonality(alg, simples, tol).gram);
      },
      py::arg("group"), py::arg("eps") = 1e-9, py::arg("seed") = 0);

  m.def(
      "twisted",
      [](const FiniteGroup& g, const std::vector<int>& perm, int mm, double eps,
         std::uint64_t seed) {
        GroupAutomorphism sigma{perm, mm};
        Tolerance tol = make_tol(eps, seed);
        validate_automorphism(g, sigma);
        auto graded = graded_group_algebra(g, sigma, tol);
        auto rep = verify_twisted_orthogonality(graded, tol);
        return py::dict(py::arg("invariant") = rep.invariant,
                        py::arg("gram") = Matrix(rep.twisted_gram),
                        py::arg("pass") = rep.checks.pass(),
                        py::arg("checks") = checks_to_list(rep.checks));
      },
      py::arg("group"), py::arg("perm"), py::arg("m"), py::arg("eps") = 1e-9,
      py::arg("seed") = 0);
}
