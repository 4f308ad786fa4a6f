#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidkit/artin_action.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/classification.hpp"
#include "braidkit/combing.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/dehornoy.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/lattice.hpp"
#include "braidkit/normal_form.hpp"

namespace py = pybind11;
using namespace braidkit;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid group engine: Garside normal forms, Artin action, combing, "
            "Dehornoy ordering and conjugacy by cyclic sliding.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("__len__", &BraidWord::length)
      .def("__str__", [](const BraidWord& w) { return serialize(w); })
      .def("__repr__",
           [](const BraidWord& w) {
             return "BraidWord(" + std::to_string(w.strands) + ", [" + serialize(w) + "])";
           })
      .def(py::self == py::self)
      .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return concat(a, b); })
      .def("__invert__", [](const BraidWord& w) { return invert(w); });

  py::class_<Permutation>(m, "Permutation")
      .def_static("from_images", &Permutation::from_images)
      .def("images", &Permutation::images)
      .def("cycle_type", &Permutation::cycle_type)
      .def("is_identity", &Permutation::is_identity)
      .def(py::self == py::self);

  py::class_<SimpleElement>(m, "SimpleElement")
      .def_readonly("strands", &SimpleElement::strands)
      .def_readonly("perm", &SimpleElement::perm)
      .def("is_identity", &SimpleElement::is_identity)
      .def("is_delta", &SimpleElement::is_delta)
      .def(py::self == py::self);

  py::class_<LeftNormalForm>(m, "LeftNormalForm")
      .def_readonly("strands", &LeftNormalForm::strands)
      .def_readonly("inf", &LeftNormalForm::inf)
      .def_readonly("factors", &LeftNormalForm::factors)
      .def("canonical_length", &LeftNormalForm::canonical_length)
      .def("sup", &LeftNormalForm::sup)
      .def("is_trivial", &LeftNormalForm::is_trivial)
      .def("to_json", [](const LeftNormalForm& f) { return json_to_py(to_json(f)); })
      .def(py::self == py::self);

  py::class_<FreeWord>(m, "FreeWord")
      .def(py::init<int, std::vector<int>>(), py::arg("rank"), py::arg("letters"))
      .def_readonly("rank", &FreeWord::rank)
      .def_readonly("letters", &FreeWord::letters)
      .def("__str__", [](const FreeWord& w) { return serialize(w); })
      .def(py::self == py::self);

  // core words
  m.def("parse_word", &parse_word, py::arg("text"), py::arg("strands"));
  m.def("serialize", py::overload_cast<const BraidWord&>(&serialize));
  m.def("free_reduce", &free_reduce);
  m.def("invert", py::overload_cast<const BraidWord&>(&invert));
  m.def("concat", py::overload_cast<const BraidWord&, const BraidWord&>(&concat));
  m.def("exponent_sum", &exponent_sum);
  m.def("permutation", &permutation);
  m.def("apply_tau", &apply_tau);

  // simple elements / normal form
  m.def("normal_form", &normal_form);
  m.def("nf_to_word", &nf_to_word);
  m.def("equal", &equal);
  m.def("nf_product", &product);
  m.def("nf_inverse", py::overload_cast<const LeftNormalForm&>(&inverse));

  // lattice
  m.def("is_positive", &is_positive);
  m.def("prefix_divides", &prefix_divides);
  m.def("gcd", &braidkit::gcd);
  m.def("lcm", &braidkit::lcm);
  m.def("torsion_witness", &torsion_witness);

  // Artin action
  m.def("parse_free_word", &parse_free_word, py::arg("text"), py::arg("rank"));
  m.def("act", &act);
  m.def("is_trivial_by_action", &is_trivial_by_action);
  m.def("is_braid_automorphism", &is_braid_automorphism);

  // combing
  m.def("is_pure", &is_pure);
  m.def("pure_generator", &pure_generator, py::arg("i"), py::arg("ambient"));
  m.def("remove_last_strand", &remove_last_strand);
  m.def("include_strand", &include_strand);
  m.def("comb", [](const BraidWord& w) { return json_to_py(to_json(comb(w))); });
  m.def("is_trivial_pure", &is_trivial_pure);

  // Dehornoy order
  m.def("handle_reduce", &handle_reduce, py::arg("w"), py::arg("fuel") = kDefaultFuel);
  m.def(
      "sign",
      [](const BraidWord& w, std::int64_t fuel) {
        const OrderSign s = sign(w, fuel);
        return s == OrderSign::zero ? 0 : s == OrderSign::positive ? 1 : -1;
      },
      py::arg("w"), py::arg("fuel") = kDefaultFuel);
  m.def("less", &less, py::arg("a"), py::arg("b"), py::arg("fuel") = kDefaultFuel);

  // conjugacy
  m.def(
      "slide_to_circuit",
      [](const BraidWord& x) {
        const SlideResult r = slide_to_circuit(x);
        return py::make_tuple(r.representative, r.conjugator, r.period);
      },
      py::arg("x"));
  m.def(
      "sliding_circuits",
      [](const BraidWord& x, std::size_t cap) {
        return json_to_py(to_json(sliding_circuits(x, cap)));
      },
      py::arg("x"), py::arg("max_vertices") = kDefaultVertexCap);
  m.def("are_conjugate", &are_conjugate, py::arg("x"), py::arg("y"),
        py::arg("max_vertices") = kDefaultVertexCap);
  m.def("centralizer_generators", &centralizer_generators, py::arg("x"),
        py::arg("max_vertices") = kDefaultVertexCap);

  // classification
  m.def("delta_braid", &delta_braid);
  m.def("epsilon_braid", &epsilon_braid);
  m.def("power", &power);
  m.def(
      "is_periodic",
      [](const BraidWord& x, std::size_t cap) -> py::object {
        const auto p = is_periodic(x, cap);
        if (!p) return py::none();
        return py::make_tuple(
            p->base == PeriodicType::Base::delta ? "delta" : "epsilon", p->power);
      },
      py::arg("x"), py::arg("max_vertices") = kDefaultVertexCap);
  m.def("is_central", &is_central);
}
