#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxplus/errors.hpp"
#include "maxplus/io.hpp"
#include "maxplus/simulation.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/switched.hpp"

namespace py = pybind11;
using namespace maxplus;

namespace {

// Scalars cross the boundary as None (epsilon) or fractions.Fraction.

py::object to_python(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(to_string(q)));
}

py::object to_python(const Scalar& s) { return s.is_epsilon() ? py::none() : to_python(s.value()); }

Scalar from_python(const py::handle& obj) {
    if (obj.is_none()) return Scalar::epsilon();
    std::string text = py::str(obj);
    if (py::isinstance<py::float_>(obj) && text == "-inf") return Scalar::epsilon();
    auto s = parse_scalar(text);
    if (!s) throw py::value_error("cannot convert '" + text + "' to a max-plus scalar");
    return *s;
}

Matrix matrix_from_rows(const std::vector<std::vector<py::object>>& rows) {
    std::vector<std::vector<Scalar>> converted;
    for (const auto& row : rows) {
        auto& out = converted.emplace_back();
        for (const auto& v : row) out.push_back(from_python(v));
    }
    return Matrix::from_rows(converted);
}

py::list vector_to_python(const Vector& v) {
    py::list out;
    for (const auto& s : v) out.append(to_python(s));
    return out;
}

Vector vector_from_python(const std::vector<py::object>& values) {
    std::vector<Scalar> out;
    for (const auto& v : values) out.push_back(from_python(v));
    return Vector(std::move(out));
}

Schedule schedule_from_python(const std::vector<std::pair<std::string, unsigned long>>& phases) {
    std::vector<Phase> out;
    for (const auto& [name, length] : phases) out.push_back({name, length});
    return Schedule(std::move(out));
}

py::dict spectral_to_python(const SpectralResult& r) {
    py::dict d;
    d["lambda"] = to_python(r.lambda);
    d["eigenvector"] = vector_to_python(r.eigenvector);
    d["period"] = r.period;
    d["transient"] = r.transient;
    d["critical_circuit"] = r.critical_circuit;
    return d;
}

py::dict switched_to_python(const SwitchedSpectral& s) {
    py::dict d;
    d["composed"] = s.composed;
    d["composed_spectral"] = spectral_to_python(s.composed_spectral);
    d["cycle_length"] = s.cycle_length;
    d["lambda_per_step"] = to_python(s.lambda_per_step);
    d["period"] = s.period;
    d["transient"] = s.transient;
    d["sufficient_condition"] = s.sufficient_condition;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact max-plus algebra and switched discrete event system analysis";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<NullScalar>(m, "NullScalar", base.ptr());
    py::register_exception<UnknownMatrixName>(m, "UnknownMatrixName", base.ptr());
    py::register_exception<ZeroInitialState>(m, "ZeroInitialState", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotIrreducible>(m, "NotIrreducible", base.ptr());
    py::register_exception<TransientBoundExceeded>(m, "TransientBoundExceeded", base.ptr());
    py::register_exception<NoEigenvectorColumn>(m, "NoEigenvectorColumn", base.ptr());
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"),
             "Square matrix from rows of None (epsilon), int, Fraction or str entries.")
        .def_static("identity", &Matrix::identity, py::arg("n"))
        .def_property_readonly("n", &Matrix::size)
        .def("__getitem__",
             [](const Matrix& a, std::pair<std::size_t, std::size_t> ij) {
                 if (ij.first >= a.size() || ij.second >= a.size()) throw py::index_error("matrix index out of range");
                 return to_python(a(ij.first, ij.second));
             })
        .def("rows",
             [](const Matrix& a) {
                 py::list rows;
                 for (std::size_t i = 0; i < a.size(); ++i) {
                     py::list row;
                     for (std::size_t j = 0; j < a.size(); ++j) row.append(to_python(a(i, j)));
                     rows.append(row);
                 }
                 return rows;
             })
        .def("transposed", &Matrix::transposed)
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__matmul__", [](const Matrix& a, const Matrix& b) { return otimes(a, b); })
        .def("__or__", [](const Matrix& a, const Matrix& b) { return oplus(a, b); })
        .def("__str__", [](const Matrix& a) { return format_matrix(a); })
        .def("__repr__", [](const Matrix& a) { return "Matrix(n=" + std::to_string(a.size()) + ")\n" + to_string(a); });

    m.def("parse_matrix", [](const std::string& text) { return parse_matrix(text); }, py::arg("text"));
    m.def("read_matrix_file", [](const std::string& path) { return read_matrix_file(path); }, py::arg("path"));
    m.def("format_matrix", &format_matrix, py::arg("matrix"));

    m.def("oplus", py::overload_cast<const Matrix&, const Matrix&>(&oplus));
    m.def("otimes", py::overload_cast<const Matrix&, const Matrix&>(&otimes));
    m.def("power", &power, py::arg("matrix"), py::arg("exponent"));
    m.def(
        "shift", [](const py::object& s, const Matrix& a) { return otimes(from_python(s), a); }, py::arg("scalar"),
        py::arg("matrix"), "Add a finite scalar to every finite entry.");
    m.def(
        "apply", [](const Matrix& a, const std::vector<py::object>& x) { return vector_to_python(otimes(a, vector_from_python(x))); },
        py::arg("matrix"), py::arg("vector"));

    m.def("is_irreducible", &is_irreducible);
    m.def("has_finite_diagonal", &has_finite_diagonal);
    m.def("strongly_connected_components", &strongly_connected_components);

    m.def("eigenvalue", [](const Matrix& a) {
        auto c = eigenvalue(a);
        return py::make_tuple(to_python(c.mean_weight), c.nodes);
    });
    m.def(
        "eigenvector",
        [](const Matrix& a, const py::object& lambda) { return vector_to_python(eigenvector(a, from_python(lambda).value())); },
        py::arg("matrix"), py::arg("eigenvalue"));
    m.def(
        "period_and_transient",
        [](const Matrix& a, unsigned long cap) {
            auto c = period_and_transient(a, cap);
            return py::make_tuple(c.period, c.transient);
        },
        py::arg("matrix"), py::arg("max_steps") = kDefaultTransientCap);
    m.def(
        "spectral_analysis", [](const Matrix& a, unsigned long cap) { return spectral_to_python(spectral_analysis(a, cap)); },
        py::arg("matrix"), py::arg("max_steps") = kDefaultTransientCap);

    m.def(
        "compose",
        [](const std::vector<std::pair<std::string, unsigned long>>& phases, const MatrixMap& matrices) {
            return compose(schedule_from_python(phases), matrices);
        },
        py::arg("schedule"), py::arg("matrices"));
    m.def(
        "product_irreducibility_check",
        [](const std::vector<Matrix>& factors, std::vector<unsigned long> powers) {
            if (powers.empty()) powers.assign(factors.size(), 1);
            auto r = product_irreducibility_check(factors, powers);
            py::dict d;
            d["product"] = r.product;
            d["irreducible"] = r.irreducible;
            d["hypothesis_held"] = r.hypothesis_held;
            return d;
        },
        py::arg("factors"), py::arg("powers") = std::vector<unsigned long>{});
    m.def(
        "switched_analysis",
        [](const std::vector<std::pair<std::string, unsigned long>>& phases, const MatrixMap& matrices,
           unsigned long cap) { return switched_to_python(switched_analysis(schedule_from_python(phases), matrices, cap)); },
        py::arg("schedule"), py::arg("matrices"), py::arg("max_steps") = kDefaultTransientCap);
    m.def(
        "eigenvalue_relation_probe",
        [](const Matrix& a, const Matrix& b) {
            auto r = eigenvalue_relation_probe(a, b);
            py::dict d;
            d["lambda_a"] = to_python(r.lambda_a);
            d["lambda_b"] = to_python(r.lambda_b);
            d["lambda_ab"] = to_python(r.lambda_ab);
            d["comparison"] = to_symbol(r.comparison);
            return d;
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "simulate",
        [](const std::vector<std::pair<std::string, unsigned long>>& phases, const MatrixMap& matrices,
           const std::vector<py::object>& x0, unsigned long horizon) {
            auto trace = simulate(schedule_from_python(phases), matrices, vector_from_python(x0), horizon);
            py::list states;
            for (const auto& x : trace.states) states.append(vector_to_python(x));
            return py::make_tuple(states, trace.applied);
        },
        py::arg("schedule"), py::arg("matrices"), py::arg("x0"), py::arg("horizon"),
        "Returns (states, applied) where applied[k] takes states[k] to states[k+1].");
    m.def(
        "cross_validate",
        [](const std::vector<std::pair<std::string, unsigned long>>& phases, const MatrixMap& matrices,
           const std::vector<py::object>& x0, unsigned long horizon) {
            auto cv = cross_validate(schedule_from_python(phases), matrices, vector_from_python(x0), horizon);
            py::dict empirical;
            empirical["detected"] = cv.empirical.detected;
            empirical["period"] = cv.empirical.period;
            empirical["lambda_per_step"] = to_python(cv.empirical.lambda_per_step);
            empirical["transient"] = cv.empirical.transient;
            py::dict d;
            d["spectral"] = switched_to_python(cv.spectral);
            d["empirical"] = empirical;
            d["horizon"] = cv.horizon;
            d["agree"] = cv.agree;
            d["diagnostics"] = cv.diagnostics;
            return d;
        },
        py::arg("schedule"), py::arg("matrices"), py::arg("x0"), py::arg("horizon") = 0);
}
