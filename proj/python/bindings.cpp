#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polycf/analysis.hpp"
#include "polycf/json_io.hpp"
#include "polycf/transforms.hpp"

namespace py = pybind11;
using polycf::json_io::Json;

namespace {

// Everything crosses the boundary as JSON text in the CLI schema; the Python
// package decodes it.

polycf::CFSpec cf_arg(const std::string& text) { return polycf::json_io::parse_cf(text); }

polycf::Real tol_arg(const std::string& tol, long bits) { return polycf::Real::from_string(tol, std::max(bits, 64L)); }

std::vector<polycf::Rational> rationals(const std::vector<std::string>& items) {
  std::vector<polycf::Rational> out;
  for (const auto& s : items) out.push_back(polycf::parse_rational(s));
  return out;
}

polycf::FamilyMember member(const std::string& preset, const polycf::Params& params, bool allow_unverified) {
  return polycf::make_preset(preset, params, allow_unverified ? polycf::Check::Lenient : polycf::Check::Strict);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_polycf, m) {
  m.doc() = "Polynomial continued fractions: exact transforms, families and verification";

  // Kept alive for the interpreter's lifetime; the translator cannot capture.
  static PyObject* error_type = PyErr_NewException("polycf._polycf.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const polycf::Error& e) {
      py::object err = py::handle(error_type)(py::str(e.what()));
      err.attr("kind") = std::string(polycf::to_string(e.kind()));
      err.attr("index") = e.index() ? py::object(py::int_(*e.index())) : py::none();
      PyErr_SetObject(error_type, err.ptr());
    }
  });

  m.def("evaluate", [](const std::string& cf, const std::string& tol, long max_terms, long bits) {
    return dump(polycf::json_io::to_json(polycf::evaluate(cf_arg(cf), tol_arg(tol, bits), max_terms, bits)));
  }, py::arg("cf"), py::arg("tol") = "1e-10", py::arg("max_terms") = 64, py::arg("precision_bits") = 128);

  m.def("evaluate_at", [](const std::string& cf, long terms, long bits) {
    return dump(polycf::json_io::to_json(polycf::evaluate_at(cf_arg(cf), terms, bits, tol_arg("0", bits))));
  }, py::arg("cf"), py::arg("terms"), py::arg("precision_bits") = 128);

  m.def("convergents", [](const std::string& cf, long n) {
    return dump(polycf::json_io::to_json(polycf::convergents(cf_arg(cf), n)));
  }, py::arg("cf"), py::arg("n"));

  m.def("even_part", [](const std::string& cf, long n) {
    return dump(polycf::json_io::to_json(polycf::even_part(cf_arg(cf), n)));
  }, py::arg("cf"), py::arg("n"));

  m.def("odd_part", [](const std::string& cf, long n) {
    return dump(polycf::json_io::to_json(polycf::odd_part(cf_arg(cf), n)));
  }, py::arg("cf"), py::arg("n"));

  m.def("bauer_muir", [](const std::string& cf, const std::vector<std::string>& w, long n) {
    return dump(polycf::json_io::to_json(polycf::bauer_muir(cf_arg(cf), rationals(w), n).cf));
  }, py::arg("cf"), py::arg("w"), py::arg("n"));

  m.def("extension", [](const std::string& cf, const std::vector<std::string>& w, long n) {
    return dump(polycf::json_io::to_json(polycf::extension_bmoe(cf_arg(cf), rationals(w), n)));
  }, py::arg("cf"), py::arg("w"), py::arg("n"));

  m.def("euler", [](const std::vector<std::string>& terms, const std::vector<std::string>& perturbation) {
    polycf::SeriesSpec s{rationals(terms), rationals(perturbation)};
    return dump(polycf::json_io::to_json(s.perturbation.empty() ? polycf::euler_from_series(s)
                                                                : polycf::generalized_euler(s)));
  }, py::arg("terms"), py::arg("perturbation") = std::vector<std::string>{});

  m.def("product", [](const std::vector<std::string>& factors, const std::vector<std::string>& perturbation) {
    polycf::ProductSpec p{rationals(factors), rationals(perturbation)};
    return dump(polycf::json_io::to_json(p.perturbation.empty() ? polycf::product_to_cf(p)
                                                                : polycf::generalized_product(p)));
  }, py::arg("factors"), py::arg("perturbation") = std::vector<std::string>{});

  m.def("bernoulli", [](const std::vector<std::string>& values) {
    return dump(polycf::json_io::to_json(polycf::bernoulli_from_sequence(rationals(values))));
  }, py::arg("values"));

  m.def("preset_ids", &polycf::preset_ids);
  m.def("preset_defaults", &polycf::preset_defaults, py::arg("preset"));

  m.def("family", [](const std::string& preset, const polycf::Params& params, bool allow_unverified) {
    return dump(polycf::json_io::to_json(member(preset, params, allow_unverified)));
  }, py::arg("preset"), py::arg("params") = polycf::Params{}, py::arg("allow_unverified") = false);

  m.def("tietze", [](const std::string& cf, long scan_limit) {
    return dump(polycf::json_io::to_json(polycf::tietze_check(cf_arg(cf), scan_limit)));
  }, py::arg("cf"), py::arg("scan_limit") = 64);

  m.def("growth", [](const std::string& cf, long n, const std::string& epsilon, long bits) {
    return dump(polycf::json_io::to_json(
        polycf::growth_diagnostics(cf_arg(cf), n, polycf::parse_rational(epsilon), bits)));
  }, py::arg("cf"), py::arg("n"), py::arg("epsilon") = "1", py::arg("precision_bits") = 128);

  m.def("verify", [](const std::string& preset, const polycf::Params& params, long terms, const std::string& tol,
                     long bits) {
    return dump(polycf::json_io::to_json(polycf::verify_limit(member(preset, params, false), terms, bits,
                                                              tol_arg(tol, bits))));
  }, py::arg("preset"), py::arg("params") = polycf::Params{}, py::arg("terms") = 64, py::arg("tol") = "1e-10",
     py::arg("precision_bits") = 128);

  m.def("reference_constant", [](const std::string& name, long bits, int digits) {
    const auto value = polycf::reference_constant(polycf::parse_constant(name), bits);
    return digits > 0 ? value.to_decimal(digits) : value.to_decimal();
  }, py::arg("name"), py::arg("precision_bits") = 128, py::arg("digits") = 0);
}
