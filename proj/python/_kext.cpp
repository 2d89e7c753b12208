#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kext/properties.hpp"
#include "kext/serialize.hpp"

namespace py = pybind11;
using namespace kext;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) {
    const auto s = o.cast<std::string>();
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) return json::parse(s);
    return json(s);
  }
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

const RefLoader& loader() {
  static const RefLoader l = default_loader(".");
  return l;
}

// pybind11 holders cannot be shared_ptr<const T>
struct PyAlgebra {
  AlgebraPtr p;
};
struct PyModule {
  ModulePtr p;
};

PyModule wrap(ModulePtr m) { return {std::move(m)}; }
PyAlgebra wrap(AlgebraPtr a) { return {std::move(a)}; }

TowerInclusion inclusion_to(const FieldPtr& small, const py::object& large) {
  return TowerInclusion(small, field_from_json(from_py(large)));
}

}  // namespace

PYBIND11_MODULE(_kext, m) {
  m.doc() = "Exact scalar extension of modules over finite-dimensional algebras";

  static py::exception<Error> exc(m, "KextError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = exc;
      py::object inst = err(e.what());
      inst.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<PyAlgebra>(m, "Algebra")
      .def_static(
          "from_json", [](const py::object& o) { return wrap(algebra_from_json(from_py(o), loader())); },
          py::arg("data"))
      .def_property_readonly("name", [](const PyAlgebra& a) { return a.p->name(); })
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.p->dim(); })
      .def_property_readonly("field", [](const PyAlgebra& a) { return field_label(a.p->field()); })
      .def("radical_dim", [](const PyAlgebra& a) { return a.p->radical().dim(); })
      .def("is_semisimple", [](const PyAlgebra& a) { return is_semisimple(*a.p); })
      .def("is_separable", [](const PyAlgebra& a) { return is_separable_algebra(*a.p); })
      .def("is_frobenius", [](const PyAlgebra& a) { return is_frobenius(*a.p).frobenius; })
      .def("center_dim", [](const PyAlgebra& a) { return center(*a.p).dim(); })
      .def("to_json", [](const PyAlgebra& a) { return to_py(algebra_to_json(*a.p)); })
      .def("extend",
           [](const PyAlgebra& a, const py::object& f) { return wrap(inclusion_to(a.p->field(), f).extend(a.p)); })
      .def("regular", [](const PyAlgebra& a) { return wrap(regular_module(a.p)); })
      .def("trivial", [](const PyAlgebra& a) { return wrap(trivial_module(a.p)); })
      .def("__repr__", [](const PyAlgebra& a) { return "<Algebra " + a.p->name() + ">"; });

  py::class_<PyModule>(m, "Module")
      .def_static(
          "from_json",
          [](const py::object& o, const PyAlgebra* a) {
            return wrap(module_from_json(from_py(o), a ? a->p : nullptr, loader()));
          },
          py::arg("data"), py::arg("algebra") = nullptr)
      .def_property_readonly("name", [](const PyModule& x) { return x.p->name(); })
      .def_property_readonly("dim", [](const PyModule& x) { return x.p->dim(); })
      .def_property_readonly("algebra", [](const PyModule& x) { return wrap(x.p->algebra()); })
      .def("to_json", [](const PyModule& x) { return to_py(module_to_json(*x.p)); })
      .def("socle_dim", [](const PyModule& x) { return socle(x.p).dim(); })
      .def("length", [](const PyModule& x) { return composition_length(x.p); })
      .def("is_semisimple", [](const PyModule& x) { return is_semisimple_module(x.p); })
      .def("semisimplify", [](const PyModule& x) { return wrap(semisimplify(x.p)); })
      .def("decompose", [](const PyModule& x) { return to_py(decomposition_to_json(decompose(x.p))); })
      .def("socle_filtration", [](const PyModule& x) { return to_py(filtration_to_json(socle_filtration(x.p))); })
      .def("extend",
           [](const PyModule& x, const py::object& f) { return wrap(t_extend_module(x.p, inclusion_to(x.p->field(), f))); })
      .def("__add__", [](const PyModule& a, const PyModule& b) { return wrap(direct_sum(*a.p, *b.p)); })
      .def("__repr__",
           [](const PyModule& x) { return "<Module " + x.p->name() + " dim " + std::to_string(x.p->dim()) + ">"; });

  m.def(
      "hom_dim", [](const PyModule& a, const PyModule& b) { return hom_dim(a.p, b.p); }, py::arg("source"),
      py::arg("target"));
  m.def("are_isomorphic", [](const PyModule& a, const PyModule& b) { return are_isomorphic(a.p, b.p); });
  m.def("tensor", [](const PyModule& a, const PyModule& b) { return wrap(tensor_module(a.p, b.p)); });
  m.def("dual", [](const PyModule& a) { return wrap(dual_module(a.p)); });
  m.def(
      "split",
      [](const PyModule& s, const py::object& f) {
        const auto inc = inclusion_to(s.p->field(), f);
        return to_py(split_report_to_json(split_simple(s.p, inc), inc));
      },
      py::arg("simple"), py::arg("field"));
  m.def(
      "run_check",
      [](const std::string& id, std::uint64_t seed, std::size_t trials, bool with_time) {
        return to_py(run_check(parse_check(id), seed, trials).to_json(with_time));
      },
      py::arg("check"), py::arg("seed") = 1, py::arg("trials") = 20, py::arg("with_time") = false);
  m.def("check_names", [] {
    std::vector<std::string> out;
    for (auto id : all_checks()) out.push_back(check_name(id));
    return out;
  });
  m.def("field_names", &named_field_names);
  m.def("catalog_algebra", [](const std::string& n) { return wrap(catalog().algebra(n).algebra); });
  m.def("catalog_module", [](const std::string& n) { return wrap(catalog().module(n).module); });
  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& a : catalog().algebras()) out.push_back(a.name);
    return out;
  });
  m.attr("catalog_version") = catalog_version();
}
