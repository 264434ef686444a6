#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kbessel/error.hpp"
#include "kbessel/integral.hpp"
#include "kbessel/kgamma.hpp"
#include "kbessel/report.hpp"
#include "kbessel/series.hpp"
#include "kbessel/verify.hpp"

namespace py = pybind11;
using namespace kbessel;

PYBIND11_MODULE(_kbessel, m) {
    m.doc() = "Generalized k-Bessel functions";

    static py::exception<Error> error(m, "KBesselError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("terms_used", &EvalResult::terms_used)
        .def_readonly("est_error", &EvalResult::est_error)
        .def("__repr__", [](const EvalResult& r) {
            return "EvalResult(value=" + format_shortest(r.value) + ", terms_used=" + std::to_string(r.terms_used) +
                   ", est_error=" + format_shortest(r.est_error) + ")";
        });

    py::class_<QuadResult>(m, "QuadResult")
        .def_readonly("value", &QuadResult::value)
        .def_readonly("nodes", &QuadResult::nodes)
        .def_readonly("doubling_delta", &QuadResult::doubling_delta);

    m.def("k_pochhammer", &k_pochhammer, py::arg("x"), py::arg("n"), py::arg("k"));
    m.def("ln_k_gamma", &ln_k_gamma, py::arg("t"), py::arg("k"));
    m.def("k_gamma", &k_gamma, py::arg("t"), py::arg("k"));
    m.def("k_digamma", &k_digamma, py::arg("t"), py::arg("k"));
    m.def("k_trigamma", &k_trigamma, py::arg("t"), py::arg("k"));
    m.def("k_beta", &k_beta, py::arg("x"), py::arg("y"), py::arg("k"));

    m.def(
        "eval_w",
        [](double k, double nu, double c, double x, double rel_tol, std::uint32_t max_terms) {
            return eval_w({k, nu, c}, x, {rel_tol, max_terms});
        },
        py::arg("k"), py::arg("nu"), py::arg("c"), py::arg("x"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 500);
    m.def(
        "eval_normalized",
        [](double k, double nu, double c, double x) { return eval_normalized_w({k, nu, c}, x); },
        py::arg("k"), py::arg("nu"), py::arg("c"), py::arg("x"));
    m.def(
        "deriv_w", [](double k, double nu, double c, double x, std::uint32_t m) { return deriv_w({k, nu, c}, x, m); },
        py::arg("k"), py::arg("nu"), py::arg("c"), py::arg("x"), py::arg("m"));

    m.def(
        "eval_w_cos", [](double k, double nu, double alpha, double x) { return eval_w_cos({k, nu, alpha, x}); },
        py::arg("k"), py::arg("nu"), py::arg("alpha"), py::arg("x"));
    m.def(
        "eval_w_cosh", [](double k, double nu, double alpha, double x) { return eval_w_cosh({k, nu, alpha, x}); },
        py::arg("k"), py::arg("nu"), py::arg("alpha"), py::arg("x"));
    m.def(
        "eval_w_bessel_kernel",
        [](double k, double nu, double c, double x) { return eval_w_bessel_kernel({k, nu, c}, x); }, py::arg("k"),
        py::arg("nu"), py::arg("c"), py::arg("x"));

    m.def("known_checks", &known_checks);
    m.def(
        "verify",
        [](const std::vector<std::string>& checks, const std::string& grid, unsigned threads) {
            const GridSpec spec = grid == "default" ? GridSpec::default_grid() : load_grid_file(grid);
            std::vector<std::string> lines;
            for (const auto& r : run_grid(spec, checks, threads)) lines.push_back(report_to_json(r));
            return lines;
        },
        py::arg("checks"), py::arg("grid") = "default", py::arg("threads") = 0,
        "Runs the verification grid and returns one JSON document per report.");
}
