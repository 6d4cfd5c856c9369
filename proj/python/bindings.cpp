// Python module exposing the main operations.  Exact values cross the
// boundary either as Cyclo objects or inside JSON-shaped dicts.

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cellmod/cli.hpp"
#include "cellmod/grouprep.hpp"
#include "cellmod/io.hpp"
#include "cellmod/verlinde.hpp"

namespace py = pybind11;
using namespace cellmod;

namespace {

py::object json_to_py(const io::Json& j) {
  switch (j.type()) {
    case io::Json::value_t::null:
      return py::none();
    case io::Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case io::Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case io::Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case io::Json::value_t::number_float:
      return py::float_(j.get<double>());
    case io::Json::value_t::string:
      return py::str(j.get<std::string>());
    case io::Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case io::Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      throw std::runtime_error("unsupported json payload");
  }
}

QuantumSpec spec_of(unsigned k, unsigned l) { return QuantumSpec::for_rank(k, l); }

py::object report_to_py(const MatchReport& rep) { return json_to_py(io::to_json(rep)); }

}  // namespace

PYBIND11_MODULE(cellmod, m) {
  m.doc() = "exact cell, fusion and Drinfeld-center computations";

  py::class_<Cyclotomic>(m, "Cyclo")
      .def_static("integer", [](long long v) { return Cyclotomic::from_integer(Integer(v)); })
      .def_static("rational",
                  [](long long p, long long q) {
                    return Cyclotomic::from_rational(Rational(p, q));
                  })
      .def_static("root_of_unity", &Cyclotomic::root_of_unity)
      .def_property_readonly("conductor", &Cyclotomic::conductor)
      .def("is_zero", &Cyclotomic::is_zero)
      .def("is_rational", &Cyclotomic::is_rational)
      .def("to_complex", &Cyclotomic::to_complex)
      .def("__str__", &Cyclotomic::to_string)
      .def("__repr__", [](const Cyclotomic& c) { return "Cyclo(" + c.to_string() + ")"; })
      .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
      .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
      .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
      .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
      .def("__truediv__", [](const Cyclotomic& a, const Cyclotomic& b) { return a / b; })
      .def("__neg__", [](const Cyclotomic& a) { return -a; })
      .def("conj", &Cyclotomic::conj)
      .def("inverse", &Cyclotomic::inverse);

  m.def(
      "quantum_number",
      [](long long n, unsigned k, unsigned l) { return quantum_number(n, spec_of(k, l)); },
      py::arg("n"), py::arg("k"), py::arg("l") = 1);
  m.def(
      "quantum_factorial",
      [](long long n, unsigned k, unsigned l) { return quantum_factorial(n, spec_of(k, l)); },
      py::arg("n"), py::arg("k"), py::arg("l") = 1);
  m.def(
      "sixj",
      [](unsigned k, int a, int b, int c, int d, int e, int f, unsigned l) {
        return sixj(spec_of(k, l), a, b, c, d, e, f);
      },
      py::arg("k"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"),
      py::arg("f"), py::arg("l") = 1);
  m.def(
      "smatrix",
      [](unsigned k, unsigned l) {
        return json_to_py(io::matrix_to_json(verlinde_smatrix(spec_of(k, l))));
      },
      py::arg("k"), py::arg("l") = 1);
  m.def(
      "jring_dihedral",
      [](int n, const std::string& hcell) {
        BasedRing r = dihedral_jring(n);
        if (!hcell.empty()) r = hcell_restrict(r, hcell);
        return json_to_py(io::to_json(r));
      },
      py::arg("n"), py::arg("hcell") = "");
  m.def("cells_dihedral", [](int n) {
    CoxeterSystem sys = CoxeterSystem::dihedral(n);
    io::Json out = io::Json::array();
    for (const auto& cell : dihedral_cells(n)) out.push_back(io::to_json(sys, cell));
    return json_to_py(out);
  });
  m.def(
      "center_adjoint",
      [](int k, unsigned l) { return json_to_py(io::to_json(center_adjoint(k, l))); },
      py::arg("k"), py::arg("l") = 1);
  m.def(
      "center_modular",
      [](unsigned k, unsigned l) {
        return json_to_py(io::to_json(center_modular(spec_of(k, l))));
      },
      py::arg("k"), py::arg("l") = 1);
  m.def(
      "center_vec",
      [](const std::string& group, bool twist) {
        return json_to_py(io::to_json(center_vec_smatrix(
            FiniteGroup::from_token(group),
            twist ? GroupTwist::kNontrivialZ2 : GroupTwist::kTrivial)));
      },
      py::arg("group"), py::arg("twist") = false);
  m.def("mset_size", [](const std::string& group) {
    return m_set(FiniteGroup::from_token(group)).entries.size();
  });
  m.def("fourier_dihedral", [](int p) {
    FourierData fd = fourier_dihedral(p);
    std::vector<std::string> labels;
    for (const auto& t : fd.pairs.pairs) labels.push_back(t.label());
    return json_to_py(io::matrix_to_json(fd.matrix, labels));
  });
  m.def("verify_dihedral", [](int n) { return report_to_py(verify_dihedral(n)); });
  m.def("verify_weyl", [](const std::string& c) { return report_to_py(verify_weyl_case(c)); });
  m.def("verify_h_case", [](const std::string& tag) {
    if (tag.size() != 1) throw std::invalid_argument("case must be one letter");
    return report_to_py(verify_h_case(tag[0]));
  });
  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
