// Python bindings. Rationals cross the boundary as fractions.Fraction (via their
// "num/den" text); structured reports come back as plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <string>

#include "eulerprob/errors.hpp"
#include "eulerprob/eulerpoly.hpp"
#include "eulerprob/identities.hpp"
#include "eulerprob/probnum.hpp"
#include "eulerprob/serialize.hpp"
#include "eulerprob/stochastic.hpp"

namespace py = pybind11;
using namespace eulerprob;

namespace {

py::object fraction(const ExactRational& q) {
  py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list fractions(const ExactSequence& seq) {
  py::list out;
  for (const auto& q : seq) out.append(fraction(q));
  return out;
}

// Accepts int, Fraction or "a/b" text. Floats are refused: they are not exact.
ExactRational rational_arg(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj))
    throw ParameterError("expected an exact rational (int, Fraction or 'a/b'), got float");
  return parse_rational(py::str(obj).cast<std::string>());
}

py::object as_dict(const nlohmann::json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

PolyInX gen_euler(int n, int p, const std::string& method) {
  if (method == "recursive") return gen_euler_recursive(n, p);
  if (method == "series") return gen_euler_series(n, p);
  throw ParameterError("method must be 'recursive' or 'series'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact probability numbers, Euler polynomials and their probabilistic identities";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<EvaluationRangeError>(m, "EvaluationRangeError", PyExc_ValueError);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("probnums", [](int N, int max_ell, const std::string& method) -> py::object {
        ProbMethod pm = parse_prob_method(method);
        ProbTable t = pm == ProbMethod::series ? probnum_series(N, max_ell)
                    : pm == ProbMethod::catalan ? probnum_catalan_table(N, max_ell)
                                                : probnum_trig(N, max_ell);
        if (t.is_exact()) return fractions(t.exact);
        return py::cast(t.approx);
      },
      py::arg("N"), py::arg("max_ell"), py::arg("method") = "series",
      "p_0..p_max_ell; Fractions for series/catalan, floats for trig.");
  m.def("probnum", [](int N, int ell) { return fraction(probnum_catalan(N, ell)); },
        py::arg("N"), py::arg("ell"), "Single p_ell by the closed Catalan sum.");
  m.def("cross_validate", [](int N, int max_ell, double tol) { return as_dict(to_json(cross_validate(N, max_ell, tol))); },
        py::arg("N"), py::arg("max_ell"), py::arg("tol") = 1e-12);
  m.def("tail_mass", &tail_mass, py::arg("N"), py::arg("max_ell"));
  m.def("f_N", &f_N, py::arg("N"), py::arg("z"));

  m.def("euler_numbers", [](int max_n) { return fractions(euler_numbers(max_n).euler_numbers); }, py::arg("max_n"));
  m.def("euler_poly", [](int n) { return fractions(euler_poly(n).coefficients()); }, py::arg("n"),
        "Coefficients of E_n(x), ascending powers.");
  m.def("gen_euler", [](int n, int p, const std::string& method) { return fractions(gen_euler(n, p, method).coefficients()); },
        py::arg("n"), py::arg("p"), py::arg("method") = "recursive");
  m.def("eval_gen_euler", [](int n, int p, const py::object& x) { return fraction(eval_gen_euler(n, p, rational_arg(x))); },
        py::arg("n"), py::arg("p"), py::arg("x"));

  m.def("reconstruct_euler",
        [](int n, int N, const py::object& x, double tol, int max_terms) {
          ReconstructionOptions opt;
          opt.tol = tol;
          opt.max_terms = max_terms;
          return as_dict(to_json(reconstruct_euler(n, N, rational_arg(x), opt)));
        },
        py::arg("n"), py::arg("N"), py::arg("x"), py::arg("tol") = 1e-9, py::arg("max_terms") = 20000);
  m.def("asymptotic_ratio", &asymptotic_ratio, py::arg("N"), py::arg("z"));
  m.def("catalan_prefix_check", [](int N) { return as_dict(to_json(catalan_prefix_check(N))); }, py::arg("N"));

  m.def("mc_euler_poly",
        [](int n, const py::object& x, std::size_t samples, std::uint64_t seed) {
          ExactRational xr = rational_arg(x);
          MomentReport r;
          {
            py::gil_scoped_release nogil;
            RandomStream rs(seed);
            r = mc_euler_poly(rs, n, xr, samples);
          }
          return as_dict(to_json(r));
        },
        py::arg("n"), py::arg("x"), py::arg("samples") = 1000000, py::arg("seed") = 42);
  m.def("mc_gen_euler",
        [](int n, int p, const py::object& x, std::size_t samples, std::uint64_t seed) {
          ExactRational xr = rational_arg(x);
          MomentReport r;
          {
            py::gil_scoped_release nogil;
            RandomStream rs(seed);
            r = mc_gen_euler(rs, n, p, xr, samples);
          }
          return as_dict(to_json(r));
        },
        py::arg("n"), py::arg("p"), py::arg("x"), py::arg("samples") = 1000000, py::arg("seed") = 42);
  m.def("mc_klebanov",
        [](int N, std::size_t samples, std::uint64_t seed) {
          MomentReport r;
          {
            py::gil_scoped_release nogil;
            RandomStream rs(seed);
            r = mc_klebanov(rs, N, samples);
          }
          return as_dict(to_json(r));
        },
        py::arg("N"), py::arg("samples") = 1000000, py::arg("seed") = 42);
  m.def("moment_integral_check", &moment_integral_check, py::arg("k"));
}
