#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ahs/serialize.hpp"
#include "ahs/suites.hpp"

namespace py = pybind11;
using namespace ahs;

namespace {

Workspace& workspace() {
    static Workspace ws;
    return ws;
}

py::object fromJson(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

// Evaluate a product of factors; returns (text, document).
py::tuple evaluateIn(const std::vector<std::string>& factors, const std::string& algebra, int n, int r) {
    const AlgebraKind alg = parseAlgebraName(algebra);
    Context& c = workspace().at(n);
    SchurAlgebra s(n, r);
    EvalContext ctx{alg, &c.modified, &s};
    const Value v = evaluateProduct(factors, ctx);
    return py::make_tuple(formatValue(v), fromJson(valueDocument(v, alg)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Affine Hall algebras, their integral forms and affine q-Schur algebras";

    static py::exception<Error> err(m, "AhsError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(err, py::make_tuple(e.what(), errorKindName(e.kind())));
        }
    });

    m.def(
        "hall_polynomial",
        [](int n, const std::string& c, const std::string& a, const std::string& b, const std::string& var) {
            const LaurentPoly f =
                workspace().at(n).oracle.hallPolynomialV(parseMatrix(c, n), parseMatrix(a, n), parseMatrix(b, n));
            return var == "q" ? formatInQ(f) : f.toString();
        },
        py::arg("n"), py::arg("C"), py::arg("A"), py::arg("B"), py::arg("var") = "v");
    m.def(
        "aut_polynomial",
        [](int n, const std::string& a, const std::string& var) {
            const LaurentPoly f = workspace().at(n).oracle.autPolynomialV(parseMatrix(a, n));
            return var == "q" ? formatInQ(f) : f.toString();
        },
        py::arg("n"), py::arg("A"), py::arg("var") = "v");
    m.def(
        "commute",
        [](int n, const std::string& minus, const std::string& plus) {
            return formatPBW(workspace().at(n).engine.commuteMinusPlus(parseMatrix(minus, n), parseMatrix(plus, n)));
        },
        py::arg("n"), py::arg("minus"), py::arg("plus"));
    m.def("evaluate", &evaluateIn, py::arg("factors"), py::arg("algebra") = "double", py::arg("n") = 2,
          py::arg("r") = 1);
    m.def("suite_names", &suiteNames);
    m.def(
        "run_suite",
        [](const std::string& name, std::vector<int> n, std::vector<int> r, int maxDim, std::uint64_t seed) {
            SuiteParams p;
            p.nList = std::move(n);
            p.rList = std::move(r);
            p.maxDim = maxDim;
            p.seed = seed;
            Report rep;
            {
                py::gil_scoped_release nogil;
                rep = runSuite(name, p, workspace());
            }
            return fromJson(reportJson(rep));
        },
        py::arg("name"), py::arg("n") = std::vector<int>{2, 3}, py::arg("r") = std::vector<int>{1, 2, 3},
        py::arg("max_dim") = 0, py::arg("seed") = SuiteParams{}.seed);
}
