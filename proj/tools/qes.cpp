/// @file qes.cpp
/// @brief Command-line front end: solve, verify, discretize, perturb, plotdata.
#include <cmath>
#include <limits>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qes/catalogue.hpp"
#include "qes/lattice.hpp"
#include "qes/oracle.hpp"
#include "qes/perturbation.hpp"
#include "qes/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace qes;

namespace {

constexpr int kSchemaVersion = 1;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config;
    std::string case_id;
    std::map<std::string, std::string> params;
    std::string variant;
    std::string format = "json";
    bool exact = false;
    double tol = 1e-5;
    std::optional<double> z_min, z_max;
    int points = 0;
    std::string builtin;
    std::string realization = "continuum";
    std::string delta = "1";
    std::string q = "2";
    std::string hahn, hahn_preset, a_plus;
    int kmax = 6;
    std::string c00 = "3", c0m = "5", ct0 = "7", cm = "11";
    std::string vp = "0,1";
    std::string sextic;
    int order = 2;
    int state = 0;
};

std::set<std::string> parameter_names() {
    std::set<std::string> names;
    for (auto id : all_cases())
        for (const auto& [k, v] : case_defaults(id)) names.insert(k);
    return names;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Rational parse_value(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const DomainError&) {
        throw ConfigError("not a number: '" + s + "'");
    }
}

void load_config(Options& o) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw ConfigError("cannot open config file " + o.config);
    json c;
    try {
        c = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!c.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> allowed{"case", "params", "variant", "format", "exact", "tol", "grid"};
    for (const auto& [k, v] : c.items())
        if (!allowed.count(k)) throw ConfigError("unknown config key '" + k + "'");
    auto want = [&](const char* key, bool ok, const char* type) {
        if (c.contains(key) && !ok) throw ConfigError(std::string("config key '") + key + "' must be " + type);
    };
    want("case", c.value("case", json()).is_string(), "a string");
    want("variant", c.value("variant", json()).is_string(), "a string");
    want("format", c.value("format", json()).is_string(), "a string");
    want("exact", c.value("exact", json()).is_boolean(), "a boolean");
    want("tol", c.value("tol", json()).is_number(), "a number");
    want("params", c.value("params", json()).is_object(), "an object");
    want("grid", c.value("grid", json()).is_object(), "an object");
    if (o.case_id.empty() && c.contains("case")) o.case_id = c["case"];
    if (o.variant.empty() && c.contains("variant")) o.variant = c["variant"];
    if (c.contains("format")) o.format = c["format"];
    if (c.contains("exact")) o.exact = o.exact || c["exact"].get<bool>();
    if (c.contains("tol")) o.tol = c["tol"];
    if (c.contains("params"))
        for (const auto& [k, v] : c["params"].items()) {
            if (!v.is_string() && !v.is_number()) throw ConfigError("parameter '" + k + "' must be a number or string");
            if (!o.params.count(k)) o.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    if (c.contains("grid")) {
        for (const auto& [k, v] : c["grid"].items()) {
            if (k != "z_min" && k != "z_max" && k != "n_points") throw ConfigError("unknown grid key '" + k + "'");
            if (!v.is_number()) throw ConfigError("grid key '" + k + "' must be a number");
        }
        const auto& g = c["grid"];
        if (!o.z_min && g.contains("z_min")) o.z_min = g["z_min"].get<double>();
        if (!o.z_max && g.contains("z_max")) o.z_max = g["z_max"].get<double>();
        if (!o.points && g.contains("n_points")) o.points = g["n_points"].get<int>();
    }
}

void validate(const Options& o) {
    if (o.format != "json" && o.format != "csv") throw ConfigError("format must be json or csv");
    if (o.tol <= 0) throw ConfigError("tolerance must be positive");
    if (o.points < 0) throw ConfigError("points must be positive");
}

CaseSpec build_spec(const Options& o) {
    if (o.case_id.empty()) throw ConfigError("--case is required");
    CaseId id;
    try {
        id = parse_case_id(o.case_id);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    std::set<std::string> known;
    for (const auto& [k, v] : case_defaults(id)) known.insert(k);
    std::map<std::string, Rational> overrides;
    for (const auto& [k, v] : o.params) {
        if (!known.count(k)) throw ConfigError("case " + to_string(id) + " has no parameter '" + k + "'");
        overrides[k] = parse_value(v);
    }
    return make_case(id, overrides, o.variant);
}

std::string poly_string(const Polynomial<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (is_zero(c)) continue;
        const Rational mag = abs(c);
        out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        if (k == 0 || mag != 1) out += to_string(mag) + (k ? "*" : "");
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

json rational_list(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json matrix_json(const BandMatrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        std::vector<Rational> r;
        for (int j = 0; j < m.size(); ++j) r.push_back(m(i, j));
        rows.push_back(rational_list(r));
    }
    return rows;
}

json params_json(const CaseSpec& s) {
    json p = json::object();
    for (const auto& [k, v] : case_defaults(s.id)) p[k] = to_string(s.at(k));
    return p;
}

json header(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

/// Real eigenvalues plus complex pairs (re, im) with im > 0.
void spectrum_json(const BandMatrix<Rational>& m, json& out) {
    json re = json::array(), cx = json::array();
    for (const auto& [r, i] : eigenvalues_complex(to_double(m))) {
        if (i == 0.0)
            re.push_back(r);
        else if (i > 0)
            cx.push_back({r, i});
    }
    out["eigenvalues"] = re;
    if (!cx.empty()) out["complex_eigenvalues"] = cx;
}

void emit(const json& j, const Options& o, const std::vector<std::string>& columns, const json& rows) {
    if (o.format == "json") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
    std::cout << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::cout << (i ? "," : "");
            if (r[i].is_string())
                std::cout << r[i].get<std::string>();
            else
                std::cout << r[i].dump();
        }
        std::cout << '\n';
    }
}

int cmd_solve(const Options& o) {
    const auto spec = build_spec(o);
    const auto m = band_matrix(spec);
    json j = header("solve");
    j["case"] = to_string(spec.id);
    if (spec.id == CaseId::XI) j["variant"] = o.variant.empty() ? "eta1" : o.variant;
    j["params"] = params_json(spec);
    j["kind"] = spec.kind == Kind::first_type ? "first_type" : "second_type";
    j["block_size"] = m.size();
    j["matrix"] = matrix_json(m);
    const auto cp = characteristic_equation(spec);
    j["char_poly"] = poly_string(cp, "eps");
    j["char_poly_coeffs"] = rational_list(cp.coeffs());
    spectrum_json(m, j);
    if (o.exact) {
        std::vector<Rational> ex;
        for (const auto& p : rational_eigenpairs(m)) ex.push_back(p.value);
        j["exact_eigenvalues"] = rational_list(ex);
    }
    j["ers_flag"] = ers_check(m);
    j["normalizable"] = has_coordinate_form(spec) ? json(normalizable(spec)) : json(nullptr);
    json conv;
    conv["constant"] = has_coordinate_form(spec) ? json(to_string(potential_constant(spec))) : json(nullptr);
    json states = json::array();
    json rows = json::array();
    if (!j.contains("complex_eigenvalues") && has_coordinate_form(spec)) {
        int k = 0;
        for (const auto& p : algebraic_eigenpairs(spec)) {
            json s;
            s["state"] = k;
            s["eps"] = p.eps;
            s["energy"] = p.energy;
            s["energy_full"] = p.energy_full;
            if (spec.kind == Kind::second_type) s["charge"] = p.charge;
            rows.push_back({k, p.eps, p.energy, p.energy_full,
                           spec.kind == Kind::second_type ? json(p.charge) : json("")});
            states.push_back(s);
            ++k;
        }
    }
    conv["convention"] = spec.kind == Kind::first_type
                             ? "energy = printed potential; energy_full = potential including constant"
                             : "eps quantizes the coupling (charge) at fixed energy";
    conv["states"] = states;
    j["energies_with_convention"] = conv;
    emit(j, o, {"state", "eps", "energy", "energy_full", "charge"}, rows);
    return 0;
}

int cmd_verify(const Options& o) {
    json j = header("verify");
    json rows = json::array();
    bool ok = true;
    auto add_row = [&](int state, double alg, double orc, int level, int nodes) {
        const double d = std::fabs(alg - orc);
        ok = ok && d <= o.tol;
        rows.push_back({state, alg, orc, d, level, nodes});
    };
    auto nearest = [](const OracleResult& r, double v) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < r.eigenvalues.size(); ++k)
            if (std::fabs(r.eigenvalues[k] - v) < std::fabs(r.eigenvalues[best] - v)) best = k;
        return best;
    };
    if (!o.builtin.empty()) {
        if (o.builtin != "harmonic") throw ConfigError("unknown builtin '" + o.builtin + "'");
        j["builtin"] = o.builtin;
        const auto r = solve([](double z) { return z * z; }, OracleDomain::line, 4, Grid::uniform(-10, 10, 4001));
        for (int k = 0; k < 4; ++k)
            add_row(k, 2.0 * k + 1, r.eigenvalues[static_cast<std::size_t>(k)], k, r.node_counts[static_cast<std::size_t>(k)]);
    } else {
        const auto spec = build_spec(o);
        j["case"] = to_string(spec.id);
        j["params"] = params_json(spec);
        if (!normalizable(spec)) throw DomainError("the algebraic states of this parameter set are not normalizable");
        const auto pairs = algebraic_eigenpairs(spec);
        OracleResult r;
        for (int count = 3 * block_size(spec) + 2;; --count) {
            try {
                r = solve_case(spec, count, o.points ? o.points : 4001);
                break;
            } catch (const AccuracyError& e) {
                if (count <= block_size(spec) || std::string(e.what()).find("truncation") == std::string::npos) throw;
            }
        }
        j["quantity"] = spec.kind == Kind::first_type ? "energy_full" : "eps";
        int k = 0;
        for (const auto& p : pairs) {
            const double alg = spec.kind == Kind::first_type ? p.energy_full : p.eps;
            const auto lvl = nearest(r, alg);
            add_row(k++, alg, r.eigenvalues[lvl], static_cast<int>(lvl), r.node_counts[lvl]);
            if (spec.kind == Kind::second_type) {
                rows.back().push_back(p.energy);
                rows.back().push_back(p.charge);
            }
        }
    }
    json table = json::array();
    for (const auto& row : rows) {
        json t;
        t["state"] = row[0];
        t["algebraic"] = row[1];
        t["oracle"] = row[2];
        t["delta"] = row[3];
        t["level"] = row[4];
        t["nodes"] = row[5];
        if (row.size() > 6) {
            t["energy"] = row[6];
            t["charge"] = row[7];
        }
        table.push_back(t);
    }
    j["tolerance"] = o.tol;
    j["rows"] = table;
    j["pass"] = ok;
    emit(j, o, {"state", "algebraic", "oracle", "delta", "level", "nodes"}, rows);
    return ok ? 0 : 4;
}

Realization make_realization(const Options& o) {
    if (o.realization == "continuum") return Realization::continuum();
    if (o.realization == "uniform") {
        const Rational d = parse_value(o.delta);
        if (is_zero(d)) throw DomainError("lattice spacing must be nonzero");
        return Realization::uniform(d);
    }
    if (o.realization == "exponential") return Realization::exponential(parse_value(o.q));
    throw ConfigError("realization must be continuum, uniform or exponential");
}

json realization_json(const Realization& r) {
    json j;
    j["kind"] = to_string(r.kind);
    if (r.kind == RealizationKind::uniform) j["delta"] = to_string(r.delta);
    if (r.kind == RealizationKind::exponential) j["q"] = to_string(r.q);
    return j;
}

int cmd_discretize(const Options& o) {
    json j = header("discretize");
    json rows = json::array();
    if (!o.hahn.empty() || !o.hahn_preset.empty()) {
        HahnParameters h;
        if (!o.hahn.empty()) {
            const auto a = split(o.hahn, ',');
            if (a.size() != 4) throw ConfigError("--hahn expects A1,A2,A3,A4");
            h = {parse_value(a[0]), parse_value(a[1]), parse_value(a[2]), parse_value(a[3]), parse_value(o.delta)};
        } else {
            const auto a = split(o.hahn_preset, ',');
            if (a.size() != 3) throw ConfigError("--hahn-preset expects N,alpha,beta");
            h = HahnParameters::hahn(parse_value(a[0]), parse_value(a[1]), parse_value(a[2]));
            h.delta = parse_value(o.delta);
        }
        if (is_zero(h.delta)) throw DomainError("lattice spacing must be nonzero");
        if (o.kmax < 0) throw ConfigError("kmax must be >= 0");
        const auto r = o.realization == "continuum" ? Realization::uniform(h.delta) : make_realization(o);
        j["operator"] = "hahn";
        j["coefficients"] = rational_list({h.a1, h.a2, h.a3, h.a4});
        j["delta"] = to_string(h.delta);
        j["realization"] = realization_json(r);
        if (!o.a_plus.empty()) {
            const Rational ap = parse_value(o.a_plus);
            const int n = o.kmax;
            const auto m = hahn_qes_operator(ap, h, n);
            const auto mr = realize(hahn_qes_hw(ap, h, n), r, n + 1);
            j["operator"] = "hahn_qes";
            j["a_plus"] = to_string(ap);
            j["n"] = n;
            j["matrix"] = matrix_json(mr);
            j["isospectral"] = mr == m;
            spectrum_json(mr, j);
            emit(j, o, {}, rows);
            return 0;
        }
        const auto l = hahn_hw(h);
        const auto st = hahn_operator(h);
        const auto m = realize(l, Realization::continuum(), o.kmax + 1);
        const auto mr = realize(l, r, o.kmax + 1);
        const auto lattice = Realization::uniform(h.delta);
        bool all = mr == m;
        json table = json::array();
        for (int k = 0; k <= o.kmax; ++k) {
            const Rational lam = hahn_eigenvalue(h, k);
            const auto c = triangular_eigenvector(m, k);
            const auto f = to_polynomial(c, lattice);
            const bool stencil = st.apply(f) == f * lam && m(k, k) == lam;
            all = all && stencil;
            json t;
            t["k"] = k;
            t["lambda"] = to_string(lam);
            t["stencil_check"] = stencil;
            t["eigenpolynomial"] = rational_list(c);
            table.push_back(t);
            rows.push_back({k, to_string(lam), stencil});
        }
        j["stencil"] = {{"A", rational_list(st.a.coeffs())}, {"B", rational_list(st.b.coeffs())},
                        {"C", rational_list(st.c.coeffs())}};
        j["spectrum"] = table;
        j["isospectral"] = all;
        emit(j, o, {"k", "lambda", "stencil_check"}, rows);
        return all ? 0 : 4;
    }
    const auto spec = build_spec(o);
    const auto r = make_realization(o);
    const auto l = element_to_hw(case_element(spec));
    const auto ref = band_matrix(spec);
    const auto m = realize(l, r, ref.size());
    j["case"] = to_string(spec.id);
    j["params"] = params_json(spec);
    j["realization"] = realization_json(r);
    j["hw_expression"] = l.str();
    j["matrix"] = matrix_json(m);
    spectrum_json(m, j);
    j["isospectral"] = m == ref;
    for (const auto& v : j["eigenvalues"]) rows.push_back({v});
    emit(j, o, {"eigenvalue"}, rows);
    return 0;
}

int cmd_perturb(const Options& o) {
    if (o.order < 0 || o.state < 0) throw ConfigError("order and state must be >= 0");
    json j = header("perturb");
    Sl2Element<Rational> e;
    std::vector<Polynomial<Rational>> vp;
    if (!o.sextic.empty()) {
        const Rational b = parse_value(o.sextic);
        e = sextic_unperturbed(b);
        vp = sextic_perturbations(b);
        j["problem"] = "sextic";
        j["b"] = to_string(b);
    } else {
        const Rational c00 = parse_value(o.c00), c0m = parse_value(o.c0m), ct0 = parse_value(o.ct0),
                       cm = parse_value(o.cm);
        using P = Polynomial<Rational>;
        e = element_from_operator(DiffOperator<Rational>({P{}, P{cm, ct0}, P{0, -c0m, -c00}}), Rational(0));
        for (const auto& part : split(o.vp, ';')) {
            std::vector<Rational> c;
            for (const auto& s : split(part, ',')) c.push_back(parse_value(s));
            vp.push_back(P(c));
        }
        j["problem"] = "generic";
        j["element"] = {{"c00", to_string(c00)}, {"c0m", to_string(c0m)}, {"ct0", to_string(ct0)}, {"cm", to_string(cm)}};
        json v = json::array();
        for (const auto& p : vp) v.push_back(rational_list(p.coeffs()));
        j["perturbation"] = v;
    }
    const auto s = dalgarno_lewis(e, vp, o.state, o.order);
    std::vector<DiffOperator<Rational>> ops;
    for (const auto& p : vp) ops.push_back(DiffOperator<Rational>::multiplication(p));
    bool clean = true;
    for (const auto& r : series_residuals(e, ops, s)) clean = clean && r.is_zero();
    j["state"] = o.state;
    j["order"] = o.order;
    j["eps"] = rational_list(s.eps);
    json phi = json::array();
    json rows = json::array();
    for (std::size_t k = 0; k < s.phi.size(); ++k) {
        phi.push_back(poly_string(s.phi[k], "x"));
        rows.push_back({static_cast<int>(k), to_string(s.eps[k]), poly_string(s.phi[k], "x")});
    }
    j["phi"] = phi;
    j["residuals_zero"] = clean;
    emit(j, o, {"k", "eps", "phi"}, rows);
    return 0;
}

int cmd_plotdata(const Options& o) {
    if (o.case_id.empty()) throw ConfigError("plotdata requires --case");
    const auto spec = build_spec(o);
    if (!has_coordinate_form(spec)) throw DomainError("case has no coordinate-space form to sample");
    const auto pairs = algebraic_eigenpairs(spec);
    const int n_points = o.points ? o.points : 401;
    if (n_points < 3) throw ConfigError("points must be >= 3");
    double lo, hi;
    if (o.z_min && o.z_max) {
        lo = *o.z_min;
        hi = *o.z_max;
    } else {
        double e = 0;
        for (const auto& p : pairs) e = std::max(e, spec.kind == Kind::first_type ? p.energy_full : std::fabs(p.eps));
        const auto dom = spec.domain == DomainKind::real_line ? OracleDomain::line : OracleDomain::half_line;
        RealFn v = [&](double z) { return frame_potential(spec, z); };
        RealFn w;
        if (spec.kind == Kind::second_type) w = [&](double z) { return std::fabs(spectral_weight(spec, z)); };
        double center = 0.0, best = std::numeric_limits<double>::infinity();
        for (double z = dom == OracleDomain::half_line ? 0.05 : -20.0; z <= 20.0; z += 0.05) {
            const double ex = v(z) - e * (w ? w(z) : 1.0);
            if (std::isfinite(ex) && ex < best) {
                best = ex;
                center = z;
            }
        }
        const auto g = auto_grid(v, w, dom, e + 5.0, n_points, center, 12.0, 4.0);
        lo = o.z_min.value_or(g.z_min);
        hi = o.z_max.value_or(g.z_max);
    }
    if (!(hi > lo)) throw ConfigError("z_max must exceed z_min");
    std::vector<std::string> columns{"z", "V"};
    for (std::size_t k = 0; k < pairs.size(); ++k) columns.push_back("psi" + std::to_string(k));
    const double h = (hi - lo) / (n_points + 1);
    std::vector<std::vector<double>> data;
    std::vector<double> peak(pairs.size(), 0.0);
    for (int i = 1; i <= n_points; ++i) {
        const double z = lo + h * i;
        std::vector<double> row{z, potential(spec, z)};
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const double v = assemble_eigenfunction(spec, pairs[k], z);
            peak[k] = std::max(peak[k], std::fabs(v));
            row.push_back(v);
        }
        data.push_back(row);
    }
    json rows = json::array();
    for (auto& row : data) {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (peak[k] > 0) row[k + 2] /= peak[k];
        rows.push_back(row);
    }
    json j = header("plotdata");
    j["case"] = to_string(spec.id);
    j["params"] = params_json(spec);
    j["columns"] = columns;
    j["rows"] = rows;
    emit(j, o, columns, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-exactly-solvable spectral toolkit"};
    app.require_subcommand(1);
    Options o;
    const auto names = parameter_names();

    auto common = [&](CLI::App* sub, bool with_case) {
        sub->add_option("--config", o.config, "JSON run configuration");
        sub->add_option("--format", o.format, "json or csv");
        if (!with_case) return;
        sub->add_option("--case", o.case_id, "Catalogue case id (I .. XII_III)");
        sub->add_option("--variant", o.variant, "Case XI solution type");
        for (const auto& n : names)
            sub->add_option_function<std::string>("--" + n, [&o, n](const std::string& v) { o.params[n] = v; },
                                                  "Case parameter " + n);
    };

    auto* solve_cmd = app.add_subcommand("solve", "Algebraic block, characteristic polynomial and spectrum");
    common(solve_cmd, true);
    solve_cmd->add_flag("--exact", o.exact, "Also report exact rational eigenvalues");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check algebraic levels against the finite-difference oracle");
    common(verify_cmd, true);
    verify_cmd->add_option("--builtin", o.builtin, "Built-in sanity problem (harmonic)");
    verify_cmd->add_option("--tol", o.tol, "Tolerance on |algebraic - oracle|");
    verify_cmd->add_option("--points", o.points, "Oracle grid points");

    auto* disc_cmd = app.add_subcommand("discretize", "Realize the operator on a lattice");
    common(disc_cmd, true);
    disc_cmd->add_option("--realization", o.realization, "continuum, uniform or exponential");
    disc_cmd->add_option("--delta", o.delta, "Uniform lattice spacing");
    disc_cmd->add_option("--q", o.q, "Exponential lattice dilation");
    disc_cmd->add_option("--hahn", o.hahn, "Hahn operator coefficients A1,A2,A3,A4");
    disc_cmd->add_option("--hahn-preset", o.hahn_preset, "Hahn parameterization N,alpha,beta");
    disc_cmd->add_option("--a-plus", o.a_plus, "Quasi-exactly-solvable Hahn coupling (uses --kmax as n)");
    disc_cmd->add_option("--kmax", o.kmax, "Highest polynomial degree");

    auto* pert_cmd = app.add_subcommand("perturb", "Dalgarno-Lewis series in the polynomial space");
    common(pert_cmd, false);
    pert_cmd->add_option("--c00", o.c00, "Coefficient of -x^2 d^2");
    pert_cmd->add_option("--c0m", o.c0m, "Coefficient of -x d^2");
    pert_cmd->add_option("--ct0", o.ct0, "Coefficient of x d");
    pert_cmd->add_option("--cm", o.cm, "Coefficient of d");
    pert_cmd->add_option("--vp", o.vp, "Perturbation coefficients, orders separated by ';'");
    pert_cmd->add_option("--sextic", o.sextic, "Sextic oscillator with parameter b");
    pert_cmd->add_option("--order", o.order, "Highest order");
    pert_cmd->add_option("--state", o.state, "Unperturbed state");

    auto* plot_cmd = app.add_subcommand("plotdata", "Sample V(z) and the algebraic eigenfunctions");
    common(plot_cmd, true);
    plot_cmd->add_option("--zmin", o.z_min, "Window start");
    plot_cmd->add_option("--zmax", o.z_max, "Window end");
    plot_cmd->add_option("--points", o.points, "Number of samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        load_config(o);
        validate(o);
        if (solve_cmd->parsed()) return cmd_solve(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
        if (disc_cmd->parsed()) return cmd_discretize(o);
        if (pert_cmd->parsed()) return cmd_perturb(o);
        if (plot_cmd->parsed()) {
            if (plot_cmd->count("--format") == 0 && o.config.empty()) o.format = "csv";
            validate(o);
            return cmd_plotdata(o);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const AccuracyError& e) {
        std::cerr << "accuracy error: " << e.what() << '\n';
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
