#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lucaskit/analysis.hpp"
#include "lucaskit/cli.hpp"
#include "lucaskit/coxcat.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/involution.hpp"
#include "lucaskit/json_io.hpp"
#include "lucaskit/lucas.hpp"

namespace py = pybind11;
using namespace lucaskit;

namespace {

// Big integers cross the boundary as decimal strings.
py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}
mpz_class from_py(const py::int_& v) { return mpz_class(py::str(v).cast<std::string>()); }

py::dict terms_of(const Poly2& p) {
  py::dict d;
  for (const auto& term : p.terms()) d[py::make_tuple(term.mono.s, term.mono.t)] = to_py(term.coeff);
  return d;
}

}  // namespace

PYBIND11_MODULE(_lucaskit, m) {
  m.doc() = "Lucas analogues of binomial coefficients and Catalan numbers";

  static py::exception<Error> base(m, "LucasError");
  py::register_exception<NotDivisible>(m, "NotDivisible", base.ptr());
  py::register_exception<NotCoprime>(m, "NotCoprime", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<NotWeightedHomogeneous>(m, "NotWeightedHomogeneous", base.ptr());
  py::register_exception<Malformed>(m, "Malformed", base.ptr());

  py::class_<Poly2>(m, "Poly2")
      .def(py::init<>())
      .def(py::init<long>())
      .def_static("s", &Poly2::s)
      .def_static("t", &Poly2::t)
      .def("terms", &terms_of, "Mapping (s_exp, t_exp) -> coefficient")
      .def("eval", [](const Poly2& p, const py::int_& s, const py::int_& t) { return to_py(poly_eval(p, from_py(s), from_py(t))); })
      .def("nonnegative", &Poly2::all_coeffs_nonnegative)
      .def("__str__", &Poly2::to_string)
      .def("__repr__", [](const Poly2& p) { return "Poly2(" + p.to_string() + ")"; })
      .def("__eq__", [](const Poly2& a, const Poly2& b) { return a == b; })
      .def("__add__", [](const Poly2& a, const Poly2& b) { return a + b; })
      .def("__mul__", [](const Poly2& a, const Poly2& b) { return a * b; })
      .def("__floordiv__", [](const Poly2& a, const Poly2& b) { return poly_exact_div(a, b); })
      .def("to_json", [](const Poly2& p) { return to_json(p).dump(); })
      .def_static("from_json", [](const std::string& text) { return poly_from_json(parse_json(text)); });

  m.def("lucas", &lucas, py::arg("n"));
  m.def("lucastorial", &lucastorial, py::arg("n"));
  m.def("lucasnomial", py::overload_cast<long, long>(&lucasnomial), py::arg("n"), py::arg("k"));
  m.def("d_lucasnomial", &d_lucasnomial, py::arg("n"), py::arg("k"), py::arg("d"));
  m.def("lucas_catalan", &lucas_catalan, py::arg("n"));
  m.def("fuss_catalan", &fuss_catalan, py::arg("n"), py::arg("k"));
  m.def("rational_catalan", &rational_catalan, py::arg("a"), py::arg("b"));
  m.def("narayana", &narayana, py::arg("n"), py::arg("k"));
  m.def(
      "coxeter_catalan",
      [](const std::string& family, unsigned param, unsigned k) {
        return coxeter_fuss_catalan(CoxeterType::parse(family, param), k);
      },
      py::arg("family"), py::arg("param") = 0, py::arg("k") = 1);
  m.def("named_quantity", &named_quantity, py::arg("expr"));

  m.def("analyze", [](const Poly2& p) {
    const CoeffReport r = analyze(p);
    py::list coeffs;
    for (const auto& c : r.coeffs) coeffs.append(to_py(c));
    py::dict d;
    d["weight"] = r.weight;
    d["coeffs"] = coeffs;
    d["unimodal"] = r.unimodal;
    d["log_concave"] = r.log_concave;
    d["real_rooted"] = r.real_rooted;
    return d;
  });

  m.def(
      "verify_involution",
      [](int n, int k, int r) {
        const InvolutionReport rep = verify_involution(n, k, r);
        py::dict d;
        d["ok"] = rep.ok();
        d["domain_size"] = rep.domain_size;
        d["violations"] = rep.violations;
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("r"));
  m.def("involution_trace_752", [] {
    std::string trace;
    iota(example_752(), &trace);
    return trace;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
