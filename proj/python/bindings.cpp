#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfrac/cli/app.hpp"
#include "cfrac/cli/certificate_json.hpp"
#include "cfrac/cli/decimal.hpp"
#include "cfrac/errors.hpp"
#include "cfrac/expansions.hpp"
#include "cfrac/irrationality.hpp"
#include "cfrac/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// Python ints and Fractions cross the boundary as decimal text.

cfrac::ExactInt to_int(const py::int_& v) { return cfrac::ExactInt::parse(py::str(v).cast<std::string>()); }

cfrac::ExactRational to_rational(const py::handle& v) {
  return cfrac::ExactRational::parse(py::str(v).cast<std::string>());
}

py::object to_fraction(const cfrac::ExactRational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object builtins_int = py::module_::import("builtins").attr("int");
  return fraction(builtins_int(r.num().to_string()), builtins_int(r.den().to_string()));
}

py::list fractions(const std::vector<cfrac::ExactRational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

py::tuple approximation(const cfrac::ApproximationResult& r) {
  return py::make_tuple(to_fraction(r.value), to_fraction(r.error_bound), r.depth);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generalized continued fractions for tanh(x/y) and e^(x/y)";
  m.attr("__version__") = cfrac::kEngineVersion;

  py::register_exception<cfrac::Error>(m, "CfracError", PyExc_ValueError);

  m.def("e_convergents", [](std::size_t depth) {
    return fractions(cfrac::convergents(cfrac::e_simple_cf(), depth));
  }, "depth"_a);
  m.def("tanh_convergents", [](const py::int_& x, const py::int_& y, std::size_t depth) {
    return fractions(cfrac::convergents(cfrac::tanh_integer_cf(to_int(x), to_int(y)), depth));
  }, "x"_a, "y"_a, "depth"_a);
  m.def("gauss_tanh_convergents", [](const py::object& z, std::size_t depth) {
    return fractions(cfrac::convergents(cfrac::gauss_tanh_cf(to_rational(z)), depth));
  }, "z"_a, "depth"_a);

  m.def("tanh_rational", [](const py::int_& x, const py::int_& y, const py::object& tol) {
    return approximation(cfrac::tanh_rational(to_int(x), to_int(y), to_rational(tol)));
  }, "x"_a, "y"_a, "tol"_a, "Returns (value, error_bound, depth) for tanh(x/y).");
  m.def("exp_rational", [](const py::int_& x, const py::int_& y, const py::object& tol) {
    return approximation(cfrac::exp_rational(to_int(x), to_int(y), to_rational(tol)));
  }, "x"_a, "y"_a, "tol"_a, "Returns (value, error_bound, depth) for e^(x/y).");

  m.def("digits", [](const std::string& expr, const py::int_& x, const py::int_& y,
                     std::size_t n) {
    if (expr != "exp" && expr != "tanh") throw py::value_error("expr must be 'exp' or 'tanh'");
    auto kind = expr == "exp" ? cfrac::cli::DigitExpr::Exp : cfrac::cli::DigitExpr::Tanh;
    return cfrac::cli::certified_digits(kind, to_int(x), to_int(y), n).digits.str();
  }, "expr"_a, "x"_a, "y"_a, "digits"_a);

  m.def("tail_index", [](const py::int_& x, const py::int_& y) {
    return cfrac::legendre_tail_index(cfrac::tanh_integer_cf(to_int(x), to_int(y)));
  }, "x"_a, "y"_a);
  m.def("certify", [](const py::int_& x, const py::int_& y) {
    return cfrac::cli::certificate_to_json(cfrac::certify_irrational(to_int(x), to_int(y)));
  }, "x"_a, "y"_a, "Irrationality certificate as JSON text.");
  m.def("verify", [](const std::string& text, std::optional<std::size_t> depth) {
    cfrac::IrrationalityCertificate cert = cfrac::cli::certificate_from_json(text);
    auto report = cfrac::verify_certificate(cert, depth.value_or(2 * cert.checked_prefix_depth));
    return py::make_tuple(report.ok, report.reason, report.violating_index);
  }, "certificate"_a, "depth"_a = py::none(), "Returns (ok, reason, violating_index).");

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "cfrac");
    std::ostringstream out, err;
    int code = cfrac::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "args"_a, "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
