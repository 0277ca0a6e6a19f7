#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewbrace/ideal_algebra.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/semidirect.hpp"
#include "skewbrace/ybe.hpp"

namespace py = pybind11;
using namespace skewbrace;

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite digroups and left skew braces as operation tables";

  py::register_exception<Error>(m, "BraceError", PyExc_ValueError);

  py::class_<ElementMap>(m, "ElementMap")
      .def(py::init<int, int, std::vector<Element>>(), py::arg("source_order"),
           py::arg("target_order"), py::arg("images"))
      .def_readonly("source_order", &ElementMap::source_order)
      .def_readonly("target_order", &ElementMap::target_order)
      .def_readonly("images", &ElementMap::images)
      .def("__call__", &ElementMap::operator())
      .def("__eq__", [](const ElementMap& a, const ElementMap& b) { return a == b; })
      .def("__repr__", [](const ElementMap& f) {
        std::string s = "ElementMap([";
        for (std::size_t i = 0; i < f.images.size(); ++i)
          s += (i ? "," : "") + std::to_string(f.images[i]);
        return s + "])";
      });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_readonly("order", &FiniteGroup::order)
      .def_readonly("table", &FiniteGroup::table)
      .def_readonly("inv", &FiniteGroup::inv)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian);

  py::class_<Digroup>(m, "Digroup")
      .def_readonly("star", &Digroup::star)
      .def_readonly("circ", &Digroup::circ)
      .def_property_readonly("order", &Digroup::order);

  py::class_<IdealSet>(m, "IdealSet")
      .def_readonly("elements", &IdealSet::elements)
      .def("__contains__", &IdealSet::contains)
      .def("__len__", &IdealSet::size)
      .def("__eq__", [](const IdealSet& a, const IdealSet& b) { return a == b; });

  py::class_<Quotient>(m, "Quotient")
      .def_readonly("digroup", &Quotient::digroup)
      .def_readonly("projection", &Quotient::projection)
      .def_readonly("cosets", &Quotient::cosets);

  py::class_<DigroupAction>(m, "DigroupAction")
      .def(py::init<Digroup, Digroup, std::vector<ElementMap>,
                    std::vector<ElementMap>, std::vector<ElementMap>>(),
           py::arg("Y"), py::arg("K"), py::arg("phi_star"),
           py::arg("phi_circ"), py::arg("lambda_"))
      .def_readonly("Y", &DigroupAction::Y)
      .def_readonly("K", &DigroupAction::K)
      .def_readonly("phi_star", &DigroupAction::phi_star)
      .def_readonly("phi_circ", &DigroupAction::phi_circ)
      .def_readonly("lambda_", &DigroupAction::lambda);

  py::class_<InnerDecomposition>(m, "InnerDecomposition")
      .def_readonly("subgroup", &InnerDecomposition::subgroup)
      .def_readonly("ideal", &InnerDecomposition::ideal)
      .def_readonly("retraction", &InnerDecomposition::retraction);

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("condition", &EquivalenceReport::condition)
      .def("all_equal", &EquivalenceReport::all_equal)
      .def("verdict", &EquivalenceReport::verdict);

  py::class_<ComponentFactors>(m, "ComponentFactors")
      .def_readonly("i2", &ComponentFactors::i2)
      .def_readonly("i3", &ComponentFactors::i3)
      .def_readonly("i4", &ComponentFactors::i4);

  py::class_<BraceConditionResult>(m, "BraceConditionResult")
      .def_readonly("holds", &BraceConditionResult::holds)
      .def_readonly("reason", &BraceConditionResult::reason)
      .def("__bool__", [](const BraceConditionResult& r) { return r.holds; });

  py::class_<RoundtripReport>(m, "RoundtripReport")
      .def_readonly("decompositions", &RoundtripReport::decompositions)
      .def_readonly("nontrivial", &RoundtripReport::nontrivial)
      .def_readonly("succeeded", &RoundtripReport::succeeded)
      .def("all_ok", &RoundtripReport::all_ok);

  py::class_<SetSolution>(m, "SetSolution")
      .def_readonly("n", &SetSolution::n)
      .def_readonly("first", &SetSolution::first)
      .def_readonly("second", &SetSolution::second);

  m.def("make_group", &make_group, py::arg("table"));
  m.def("catalog", &catalog, py::arg("name"));
  m.def("is_subgroup", &is_subgroup);
  m.def("is_normal", &is_normal);
  m.def("conjugation_map", &conjugation_map);
  m.def("is_homomorphism", &is_homomorphism);
  m.def("is_antihomomorphism", &is_antihomomorphism);
  m.def("automorphisms", &automorphisms, py::arg("g"),
        py::arg("max_order") = kDefaultMaxOrder);

  m.def("make_digroup", &make_digroup);
  m.def("trivial_digroup", &trivial_digroup);
  m.def("catalog_digroup", &catalog_digroup);
  m.def("s3c6_brace", &s3c6_brace);
  m.def("lambda_map", &lambda_map);
  m.def("lambda_inverse_map", &lambda_inverse_map);
  m.def("is_skew_brace", &is_skew_brace);
  m.def("is_skew_brace_via_lambda", &is_skew_brace_via_lambda);
  m.def("is_subdigroup", &is_subdigroup);
  m.def("is_ideal", &is_ideal);
  m.def("is_ideal_via_lambda", &is_ideal_via_lambda);
  m.def("as_ideal", &as_ideal);
  m.def("ideals", &ideals, py::arg("d"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("quotient", &quotient);
  m.def("enumerate_digroups", &enumerate_digroups, py::arg("star"),
        py::arg("braces_only") = false, py::arg("max_order") = 8);
  m.def("digroup_isomorphic", &digroup_isomorphic, py::arg("a"), py::arg("b"),
        py::arg("max_order") = kDefaultMaxOrder);

  m.def("idempotent_endomorphisms", &idempotent_endomorphisms, py::arg("d"),
        py::arg("max_order") = kDefaultMaxOrder);
  m.def("check_equivalences", &check_equivalences);
  m.def("component_formulas", &component_formulas);
  m.def("extract_action", &extract_action);
  m.def("validate_action", &validate_action);
  m.def("action_violation", &action_violation);
  m.def("outer_product", &outer_product);
  m.def("brace_condition", &brace_condition);
  m.def("corollary_split", &corollary_split);
  m.def("ppp_identities", &ppp_identities);
  m.def("outer_negation", &outer_negation);
  m.def("lambda_product_formula", &lambda_product_formula);
  m.def("alpha_isomorphism", &alpha_isomorphism);
  m.def("reconstruct_roundtrip", &reconstruct_roundtrip, py::arg("d"),
        py::arg("max_order") = kDefaultMaxOrder);

  m.def("ideal_generated_by", &ideal_generated_by, py::arg("d"),
        py::arg("seed"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("commutator_ideal", &commutator_ideal, py::arg("d"), py::arg("lhs"),
        py::arg("rhs"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("center", &center, py::arg("d"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("center_elementwise", &center_elementwise);
  m.def("lattice_ops", [](const Digroup& d, const IdealSet& lhs,
                          const IdealSet& rhs) {
    LatticePair p = lattice_ops(d, lhs, rhs);
    return py::make_tuple(p.join, p.meet);
  });

  m.def("make_solution", &make_solution);
  m.def("braid_check", &braid_check);
  m.def("nondegeneracy_check", &nondegeneracy_check);
  m.def("solution_from_brace", &solution_from_brace);
  m.def("flip_solution", &flip_solution);
  m.def("identity_solution", &identity_solution);

  m.def("parse_dgt", &parse_dgt);
  m.def("emit_dgt", &emit_dgt);
  m.def("parse_action", &parse_action);
  m.def("emit_action", &emit_action);
  m.def("emit_solution", &emit_solution);
  m.def("parse_solution", &parse_solution);
}
