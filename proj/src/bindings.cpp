/// @file bindings.cpp
/// @brief Python module qespy: catalogue blocks, spectra, oracle, perturbation, lattice realizations.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qes/catalogue.hpp"
#include "qes/classical.hpp"
#include "qes/lattice.hpp"
#include "qes/oracle.hpp"
#include "qes/perturbation.hpp"
#include "qes/spectral.hpp"

namespace py = pybind11;
using namespace qes;

namespace {

using Params = std::map<std::string, py::object>;

py::object fraction(const Rational& v) { return py::module_::import("fractions").attr("Fraction")(to_string(v)); }

Rational rational(const py::handle& v) { return parse_rational(py::str(v).cast<std::string>()); }

py::list fractions(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

py::list matrix(const BandMatrix<Rational>& m) {
    py::list rows;
    for (int i = 0; i < m.size(); ++i) {
        std::vector<Rational> r;
        for (int j = 0; j < m.size(); ++j) r.push_back(m(i, j));
        rows.append(fractions(r));
    }
    return rows;
}

CaseSpec spec(const std::string& id, const Params& params, const std::string& variant) {
    std::map<std::string, Rational> ov;
    for (const auto& [k, v] : params) ov[k] = rational(v);
    return make_case(parse_case_id(id), ov, variant);
}

Realization realization(const std::string& kind, const py::object& delta, const py::object& q) {
    if (kind == "continuum") return Realization::continuum();
    if (kind == "uniform") return Realization::uniform(rational(delta));
    if (kind == "exponential") return Realization::exponential(rational(q));
    throw DomainError("realization must be continuum, uniform or exponential");
}

FamilySpec family(const std::string& name, int p, const py::object& a, const py::object& b, int variant,
                  const py::object& alpha) {
    switch (parse_family(name)) {
        case Family::hermite:
            return FamilySpec::hermite(p);
        case Family::hermite_x:
            return FamilySpec::hermite_x();
        case Family::laguerre:
            return FamilySpec::laguerre(rational(a));
        case Family::legendre:
            return FamilySpec::legendre();
        case Family::legendre_gauged:
            return FamilySpec::legendre_gauged(p);
        case Family::jacobi_sym:
            return FamilySpec::jacobi_sym(rational(a), rational(b));
        case Family::jacobi_asym:
            return FamilySpec::jacobi_asym(rational(a), rational(b));
        case Family::mathieu:
        default:
            return FamilySpec::mathieu(variant, rational(alpha));
    }
}

}  // namespace

PYBIND11_MODULE(qespy, m) {
    m.doc() = "Quasi-exactly-solvable spectral toolkit";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
    py::register_exception<RealityError>(m, "RealityError", PyExc_ArithmeticError);
    py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_ArithmeticError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);
    (void)domain_error;

    m.def("case_ids", [] {
        std::vector<std::string> out;
        for (auto id : all_cases()) out.push_back(to_string(id));
        return out;
    });

    m.def("case_defaults", [](const std::string& id) {
        py::dict out;
        for (const auto& [k, v] : case_defaults(parse_case_id(id))) out[py::str(k)] = fraction(v);
        return out;
    });

    m.def(
        "band_matrix", [](const std::string& id, const Params& p, const std::string& v) { return matrix(band_matrix(spec(id, p, v))); },
        py::arg("case"), py::arg("params") = Params{}, py::arg("variant") = "",
        "Algebraic block, entry (i, j) = coefficient of x^i in the image of x^j.");

    m.def(
        "characteristic_equation",
        [](const std::string& id, const Params& p, const std::string& v) {
            return fractions(characteristic_equation(spec(id, p, v)).coeffs());
        },
        py::arg("case"), py::arg("params") = Params{}, py::arg("variant") = "", "Coefficients, constant term first.");

    m.def(
        "eigenvalues",
        [](const std::string& id, const Params& p, const std::string& v) {
            return eigen(band_matrix(spec(id, p, v))).eigenvalues;
        },
        py::arg("case"), py::arg("params") = Params{}, py::arg("variant") = "");

    m.def(
        "ers_check", [](const std::string& id, const Params& p) { return ers_check(band_matrix(spec(id, p, ""))); },
        py::arg("case"), py::arg("params") = Params{});

    m.def(
        "algebraic_eigenpairs",
        [](const std::string& id, const Params& p, const std::string& v) {
            py::list out;
            for (const auto& e : algebraic_eigenpairs(spec(id, p, v))) {
                py::dict d;
                d["eps"] = e.eps;
                d["energy"] = e.energy;
                d["energy_full"] = e.energy_full;
                d["charge"] = e.charge;
                d["poly"] = e.poly.coeffs();
                out.append(d);
            }
            return out;
        },
        py::arg("case"), py::arg("params") = Params{}, py::arg("variant") = "");

    m.def(
        "potential", [](const std::string& id, const Params& p, double z) { return potential(spec(id, p, ""), z); },
        py::arg("case"), py::arg("params"), py::arg("z"));

    m.def(
        "oracle",
        [](const std::function<double(double)>& v, const std::string& domain, int count, double z_min, double z_max,
           int n_points) {
            const auto d = domain == "half_line" ? OracleDomain::half_line : OracleDomain::line;
            auto r = solve(v, d, count, Grid::uniform(z_min, z_max, n_points));
            return py::make_tuple(r.eigenvalues, r.node_counts);
        },
        py::arg("potential"), py::arg("domain"), py::arg("count"), py::arg("z_min"), py::arg("z_max"),
        py::arg("n_points") = 4001, "Lowest eigenvalues and node counts of -psi'' + V psi = E psi.");

    m.def(
        "solve_case",
        [](const std::string& id, const Params& p, int count) {
            auto r = solve_case(spec(id, p, ""), count);
            return py::make_tuple(r.eigenvalues, r.node_counts);
        },
        py::arg("case"), py::arg("params") = Params{}, py::arg("count") = 4);

    m.def(
        "dalgarno_lewis",
        [](const py::object& c00, const py::object& c0m, const py::object& ct0, const py::object& cm,
           const std::vector<std::vector<py::object>>& vp, int state, int order) {
            using P = Polynomial<Rational>;
            auto e = element_from_operator(
                DiffOperator<Rational>({P{}, P{rational(cm), rational(ct0)}, P{0, -rational(c0m), -rational(c00)}}),
                Rational(0));
            std::vector<P> ps;
            for (const auto& row : vp) {
                std::vector<Rational> c;
                for (const auto& x : row) c.push_back(rational(x));
                ps.emplace_back(c);
            }
            return fractions(dalgarno_lewis(e, ps, state, order).eps);
        },
        py::arg("c00"), py::arg("c0m"), py::arg("ct0"), py::arg("cm"), py::arg("vp"), py::arg("state") = 0,
        py::arg("order") = 2, "Energy corrections eps_0..eps_order for -(c00 x^2 + c0m x) d^2 + (ct0 x + cm) d + g Vp.");

    m.def(
        "sextic_vanishing_check", [](const py::object& b, int order) { return sextic_vanishing_check(rational(b), order); },
        py::arg("b"), py::arg("order"));

    m.def(
        "normal_order", [](const std::string& text) { return normal_order(text).str(); }, py::arg("expression"));

    m.def(
        "realize",
        [](const std::string& id, const Params& p, const std::string& kind, const py::object& delta,
           const py::object& q) {
            const auto s = spec(id, p, "");
            return matrix(realize(element_to_hw(case_element(s)), realization(kind, delta, q), block_size(s)));
        },
        py::arg("case"), py::arg("params") = Params{}, py::arg("realization") = "continuum",
        py::arg("delta") = py::int_(1), py::arg("q") = py::int_(2));

    m.def(
        "hahn_eigenvalue",
        [](const py::object& n, const py::object& alpha, const py::object& beta, int k) {
            return fraction(hahn_eigenvalue(HahnParameters::hahn(rational(n), rational(alpha), rational(beta)), k));
        },
        py::arg("n_points"), py::arg("alpha"), py::arg("beta"), py::arg("k"));

    m.def(
        "family_eigenvalue",
        [](const std::string& name, int k, int p, const py::object& a, const py::object& b, int variant,
           const py::object& alpha) { return fraction(family_eigenvalue(family(name, p, a, b, variant, alpha), k)); },
        py::arg("family"), py::arg("k"), py::arg("p") = 0, py::arg("a") = py::int_(0), py::arg("b") = py::int_(0),
        py::arg("variant") = 0, py::arg("alpha") = py::int_(1));

    m.def(
        "generate_polynomial",
        [](const std::string& name, int degree, int p, const py::object& a, const py::object& b) {
            return fractions(generate_polynomial(family(name, p, a, b, 0, py::int_(1)), degree).coeffs());
        },
        py::arg("family"), py::arg("degree"), py::arg("p") = 0, py::arg("a") = py::int_(0), py::arg("b") = py::int_(0));
}
