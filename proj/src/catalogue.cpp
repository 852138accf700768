/// @file catalogue.cpp
/// @brief Per-case data of the catalogue and the generic reduction built on it.
#include "qes/catalogue.hpp"

#include <algorithm>
#include <cmath>

#include "qes/spectral.hpp"

namespace qes {

namespace {

using R = Rational;
using P = Polynomial<Rational>;
using Fn = std::function<double(double)>;

struct Model {
    Fn x, dx, ddx, A, dA, ddA, w;
    Fn v_phys;           ///< physical (or weighted) potential including K, without centrifugal term
    double K = 0.0;      ///< V_full = V_printed + K
    bool radial = false;
    double centrifugal_coeff = 0.0;  ///< (D-1)(D-3)/4
    double radial_power = 0.0;       ///< R = u r^{-(d-1)/2}
};

const std::vector<std::pair<CaseId, std::string>>& names() {
    static const std::vector<std::pair<CaseId, std::string>> t{
        {CaseId::I, "I"},         {CaseId::II, "II"},     {CaseId::III, "III"},       {CaseId::IV, "IV"},
        {CaseId::V, "V"},         {CaseId::VI, "VI"},     {CaseId::VII, "VII"},       {CaseId::VIII, "VIII"},
        {CaseId::IX, "IX"},       {CaseId::X, "X"},       {CaseId::X_alt, "X_alt"},   {CaseId::XI, "XI"},
        {CaseId::XII_I, "XII_I"}, {CaseId::XII_II, "XII_II"}, {CaseId::XII_III, "XII_III"}};
    return t;
}

int as_int(const R& v, const std::string& name) {
    if (v.get_den() != 1) throw DomainError(name + " must be an integer");
    return static_cast<int>(v.get_num().get_si());
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

bool is_elliptic(CaseId id) { return id == CaseId::XII_I || id == CaseId::XII_II || id == CaseId::XII_III; }

/// D_c = d + 2l - 2c
R radial_dc(const CaseSpec& s) { return s.at("d") + R(2) * s.at("l") - R(2) * s.at("c"); }

std::pair<LameType, int> parse_variant(const std::string& v) {
    if (v.empty() || v == "eta1") return {LameType::eta1, 1};
    if (v == "eta4") return {LameType::eta4, 1};
    if (v.size() == 6 && (v.rfind("eta2_", 0) == 0 || v.rfind("eta3_", 0) == 0)) {
        int i = v[5] - '0';
        if (i >= 1 && i <= 3) return {v[3] == '2' ? LameType::eta2 : LameType::eta3, i};
    }
    throw DomainError("unknown Lame solution type '" + v + "'");
}

int lame_mark(LameType t, int m) {
    switch (t) {
        case LameType::eta1:
            require(m % 2 == 0 && m >= 0, "eta1 needs even m");
            return m / 2;
        case LameType::eta2:
            require(m % 2 == 1 && m >= 1, "eta2 needs odd m");
            return (m - 1) / 2;
        case LameType::eta3:
            require(m % 2 == 0 && m >= 2, "eta3 needs even m >= 2");
            return m / 2 - 1;
        case LameType::eta4:
        default:
            require(m % 2 == 1 && m >= 3, "eta4 needs odd m >= 3");
            return (m - 1) / 2 - 1;
    }
}

Model build_model(const CaseSpec& s) {
    Model M;
    auto g = [&](const char* k) { return s.d(k); };
    switch (s.id) {
        case CaseId::I: {
            double al = g("alpha"), a = g("a"), b = g("b"), c = g("c"), n = g("n");
            M.x = [=](double z) { return std::exp(-al * z); };
            M.dx = [=](double z) { return -al * std::exp(-al * z); };
            M.ddx = [=](double z) { return al * al * std::exp(-al * z); };
            M.A = [=](double z) { return a / al * std::exp(-al * z) - b * z + c / al * std::exp(al * z); };
            M.dA = [=](double z) { return -a * std::exp(-al * z) - b + c * std::exp(al * z); };
            M.ddA = [=](double z) { return a * al * std::exp(-al * z) + c * al * std::exp(al * z); };
            M.w = [=](double) { return al; };
            M.K = b * b - 2 * a * c;
            double K = M.K;
            M.v_phys = [=](double z) {
                double em = std::exp(-al * z), ep = std::exp(al * z);
                return a * a * em * em + a * (2 * b - al * (2 * n + 1)) * em - c * (2 * b + al) * ep + c * c * ep * ep +
                       K;
            };
            break;
        }
        case CaseId::II: {
            double al = g("alpha"), a = g("a"), b = g("b"), c = g("c"), n = g("n");
            M.x = [=](double z) { return std::exp(-al * z); };
            M.dx = [=](double z) { return -al * std::exp(-al * z); };
            M.ddx = [=](double z) { return al * al * std::exp(-al * z); };
            M.A = [=](double z) {
                double e = std::exp(-al * z);
                return -a / (2 * al) * e * e - c / al * e - (b + al) * z;
            };
            M.dA = [=](double z) {
                double e = std::exp(-al * z);
                return a * e * e + c * e - (b + al);
            };
            M.ddA = [=](double z) {
                double e = std::exp(-al * z);
                return -2 * a * al * e * e - c * al * e;
            };
            M.w = [=](double z) { return al * std::exp(-al * z); };
            M.K = (b + al) * (b + al);
            double K = M.K;
            M.v_phys = [=](double z) {
                double e = std::exp(-al * z);
                return a * a * std::pow(e, 4) + 2 * a * c * std::pow(e, 3) + (c * c - 2 * a * b + 2 * a * al * n) * e * e -
                       c * (2 * b + al) * e + K;
            };
            break;
        }
        case CaseId::III: {
            double al = g("alpha"), a = g("a"), b = g("b"), c = g("c"), n = g("n");
            M.x = [=](double z) { return std::exp(-al * z); };
            M.dx = [=](double z) { return -al * std::exp(-al * z); };
            M.ddx = [=](double z) { return al * al * std::exp(-al * z); };
            M.A = [=](double z) {
                double e = std::exp(al * z);
                return a / al * e - b * z + c / (2 * al) * e * e;
            };
            M.dA = [=](double z) {
                double e = std::exp(al * z);
                return a * e - b + c * e * e;
            };
            M.ddA = [=](double z) {
                double e = std::exp(al * z);
                return a * al * e + 2 * c * al * e * e;
            };
            M.w = [=](double z) { return al * std::exp(al * z); };
            M.K = (b - al * n) * (b - al * n);
            double K = M.K;
            M.v_phys = [=](double z) {
                double e = std::exp(al * z);
                return c * c * std::pow(e, 4) + 2 * a * c * std::pow(e, 3) + (a * a - 2 * c * (b + al)) * e * e -
                       a * (2 * b + al) * e + K;
            };
            break;
        }
        case CaseId::IV: {
            double al = g("alpha"), a = g("a"), c = g("c"), n = g("n"), p = g("p");
            M.x = [=](double z) { return 1.0 / std::pow(std::cosh(al * z), 2); };
            M.dx = [=](double z) { return -2 * al * std::tanh(al * z) / std::pow(std::cosh(al * z), 2); };
            M.ddx = [=](double z) {
                double u = 1.0 / std::pow(std::cosh(al * z), 2), t = std::tanh(al * z);
                return -2 * al * al * u * u + 4 * al * al * t * t * u;
            };
            M.A = [=](double z) {
                double v = a / (4 * al) * std::cosh(2 * al * z) + c / al * std::log(std::cosh(al * z));
                if (p != 0) v -= p * std::log(std::fabs(std::tanh(al * z)));
                return v;
            };
            M.dA = [=](double z) {
                double sh = std::sinh(al * z), ch = std::cosh(al * z);
                double v = a * sh * ch + c * sh / ch;
                if (p != 0) v -= p * al / (sh * ch);
                return v;
            };
            M.ddA = [=](double z) {
                double sh = std::sinh(al * z), ch = std::cosh(al * z);
                double v = a * al * (ch * ch + sh * sh) + c * al / (ch * ch);
                if (p != 0) v += p * al * al * (ch * ch + sh * sh) / (sh * sh * ch * ch);
                return v;
            };
            M.w = [=](double) { return -al; };
            M.K = c * c + a * al - 2 * a * c - 2 * a * al * p;
            double K = M.K;
            M.v_phys = [=](double z) {
                double C2 = std::pow(std::cosh(al * z), 2);
                double m = 2 * n + p;
                return a * a * C2 * C2 - a * (a + 2 * al - 2 * c) * C2 -
                       (c * (c + al) + al * m * (al * (m + 1) + 2 * c)) / C2 + K;
            };
            break;
        }
        case CaseId::V: {
            double al = g("alpha"), a = g("a"), b = g("b"), n = g("n"), p = g("p");
            M.x = [=](double z) { return 1.0 / std::pow(std::cosh(al * z), 2); };
            M.dx = [=](double z) { return -2 * al * std::tanh(al * z) / std::pow(std::cosh(al * z), 2); };
            M.ddx = [=](double z) {
                double u = 1.0 / std::pow(std::cosh(al * z), 2), t = std::tanh(al * z);
                return -2 * al * al * u * u + 4 * al * al * t * t * u;
            };
            M.A = [=](double z) {
                double u = 1.0 / std::pow(std::cosh(al * z), 2);
                double v = (a + b) / al * std::log(std::cosh(al * z)) + b / (2 * al) * u;
                if (p != 0) v -= p * std::log(std::fabs(std::tanh(al * z)));
                return v;
            };
            M.dA = [=](double z) {
                double sh = std::sinh(al * z), ch = std::cosh(al * z), t = sh / ch, u = 1 / (ch * ch);
                double v = (a + b) * t - b * t * u;
                if (p != 0) v -= p * al / (sh * ch);
                return v;
            };
            M.ddA = [=](double z) {
                double sh = std::sinh(al * z), ch = std::cosh(al * z), u = 1 / (ch * ch);
                double v = (a + 3 * b) * al * u - 3 * b * al * u * u;
                if (p != 0) v += p * al * al * (ch * ch + sh * sh) / (sh * sh * ch * ch);
                return v;
            };
            M.w = [=](double z) { return -2 * al / std::pow(std::cosh(al * z), 2); };
            M.K = (a + b) * (a + b);
            double K = M.K;
            M.v_phys = [=](double z) {
                double u = 1.0 / std::pow(std::cosh(al * z), 2);
                return -b * b * u * u * u + b * (2 * a + 3 * b + al * (4 * n + 2 * p + 3)) * u * u -
                       ((a + 3 * b) * (a + b + al) + 2 * (2 * n + p) * al * b) * u - 2 * p * al * (a + b + al) * u + K;
            };
            break;
        }
        case CaseId::VI: {
            double a = g("a"), b = g("b"), n = g("n"), p = g("p");
            M.x = [](double z) { return z * z; };
            M.dx = [](double z) { return 2 * z; };
            M.ddx = [](double) { return 2.0; };
            M.A = [=](double z) {
                double v = a * std::pow(z, 4) / 4 + b * z * z / 2;
                if (p != 0) v -= p * std::log(std::fabs(z));
                return v;
            };
            M.dA = [=](double z) { return a * z * z * z + b * z - (p != 0 ? p / z : 0.0); };
            M.ddA = [=](double z) { return 3 * a * z * z + b + (p != 0 ? p / (z * z) : 0.0); };
            M.w = [](double) { return 1.0; };
            M.K = -b * (2 * p + 1);
            double K = M.K;
            M.v_phys = [=](double z) {
                double z2 = z * z;
                return a * a * z2 * z2 * z2 + 2 * a * b * z2 * z2 + (b * b - (4 * n + 3 + 2 * p) * a) * z2 + K;
            };
            break;
        }
        case CaseId::VII:
        case CaseId::VIII:
        case CaseId::IX: {
            double a = g("a"), b = g("b"), c = g("c"), n = g("n"), d = g("d"), l = g("l");
            double dc = radial_dc(s).get_d(), D = d + 2 * l, sh = (dc - 1) / 2;
            M.radial = true;
            M.centrifugal_coeff = (D - 1) * (D - 3) / 4;
            M.radial_power = -(d - 1) / 2;
            double cc = c * (c + dc - 2);
            if (s.id == CaseId::VII) {
                M.x = [](double r) { return r * r; };
                M.dx = [](double r) { return 2 * r; };
                M.ddx = [](double) { return 2.0; };
                M.A = [=](double r) { return a * std::pow(r, 4) / 4 + b * r * r / 2 - sh * std::log(r); };
                M.dA = [=](double r) { return a * r * r * r + b * r - sh / r; };
                M.ddA = [=](double r) { return 3 * a * r * r + b + sh / (r * r); };
                M.w = [](double) { return 1.0; };
                M.K = -b * dc;
                double K = M.K;
                M.v_phys = [=](double r) {
                    double r2 = r * r;
                    return a * a * r2 * r2 * r2 + 2 * a * b * r2 * r2 + (b * b - (4 * n + dc + 2) * a) * r2 - cc / r2 + K;
                };
            } else if (s.id == CaseId::VIII) {
                M.x = [](double r) { return r; };
                M.dx = [](double) { return 1.0; };
                M.ddx = [](double) { return 0.0; };
                M.A = [=](double r) { return a * r * r / 2 + b * r - sh * std::log(r); };
                M.dA = [=](double r) { return a * r + b - sh / r; };
                M.ddA = [=](double r) { return a + sh / (r * r); };
                M.w = [](double r) { return 1.0 / r; };
                M.K = b * b - a * (2 * n + dc);
                double K = M.K;
                M.v_phys = [=](double r) { return a * a * r * r + 2 * a * b * r - b * (dc - 1) / r - cc / (r * r) + K; };
            } else {
                M.x = [](double r) { return r; };
                M.dx = [](double) { return 1.0; };
                M.ddx = [](double) { return 0.0; };
                M.A = [=](double r) { return a * r + b / r - sh * std::log(r); };
                M.dA = [=](double r) { return a - b / (r * r) - sh / r; };
                M.ddA = [=](double r) { return 2 * b / (r * r * r) + sh / (r * r); };
                M.w = [](double r) { return 1.0 / (r * r); };
                M.K = a * a;
                double K = M.K;
                M.v_phys = [=](double r) {
                    double r2 = r * r;
                    return b * b / (r2 * r2) + b * (dc - 3) / (r2 * r) - (cc + 2 * a * b) / r2 - a * (2 * n + dc - 1) / r +
                           K;
                };
            }
            break;
        }
        case CaseId::X: {
            double al = g("alpha"), a = g("a"), mu = g("mu"), n = g("n");
            M.x = [=](double z) { return std::cos(al * z); };
            M.dx = [=](double z) { return -al * std::sin(al * z); };
            M.ddx = [=](double z) { return -al * al * std::cos(al * z); };
            M.A = [=](double z) {
                double v = -a * std::cos(al * z);
                if (mu != 0) v -= mu * std::log(std::fabs(std::sin(al * z)));
                return v;
            };
            M.dA = [=](double z) {
                double v = a * al * std::sin(al * z);
                if (mu != 0) v -= mu * al * std::cos(al * z) / std::sin(al * z);
                return v;
            };
            M.ddA = [=](double z) {
                double v = a * al * al * std::cos(al * z);
                if (mu != 0) v += mu * al * al / std::pow(std::sin(al * z), 2);
                return v;
            };
            M.w = [](double) { return 1.0; };
            M.K = -2 * al * al * mu;
            double K = M.K;
            M.v_phys = [=](double z) {
                double sn = std::sin(al * z);
                return al * al * (a * a * sn * sn - a * (2 * n + 1) * std::cos(al * z) + mu) + K;
            };
            break;
        }
        case CaseId::X_alt: {
            double al = g("alpha"), a = g("a"), n1 = g("nu1"), n2 = g("nu2"), n = g("n");
            M.x = [=](double z) { return std::cos(al * z); };
            M.dx = [=](double z) { return -al * std::sin(al * z); };
            M.ddx = [=](double z) { return -al * al * std::cos(al * z); };
            M.A = [=](double z) {
                double v = -a * std::cos(al * z);
                if (n1 != 0) v -= n1 * std::log(std::fabs(std::cos(al * z / 2)));
                if (n2 != 0) v -= n2 * std::log(std::fabs(std::sin(al * z / 2)));
                return v;
            };
            M.dA = [=](double z) {
                double h = al * z / 2;
                return a * al * std::sin(al * z) + al / 2 * (n1 * std::tan(h) - n2 / std::tan(h));
            };
            M.ddA = [=](double z) {
                double h = al * z / 2;
                return a * al * al * std::cos(al * z) +
                       al * al / 4 * (n1 / std::pow(std::cos(h), 2) + n2 / std::pow(std::sin(h), 2));
            };
            M.w = [](double) { return 1.0; };
            M.K = 0.0;
            M.v_phys = [=](double z) {
                double sn = std::sin(al * z);
                return al * al * (a * a * sn * sn - 2 * n * a * std::cos(al * z) + a * (n1 - n2) - 0.25);
            };
            break;
        }
        default:
            throw DomainError("case " + to_string(s.id) + " has no coordinate realization");
    }
    return M;
}

/// Fourth-order central second derivative.
template <class F>
double second_derivative(const F& f, double z, double h) {
    return (-f(z + 2 * h) + 16 * f(z + h) - 30 * f(z) + 16 * f(z - h) - f(z - 2 * h)) / (12 * h * h);
}

/// Fourth-order central first derivative.
template <class F>
double first_derivative(const F& f, double z, double h) {
    return (-f(z + 2 * h) + 8 * f(z + h) - 8 * f(z - h) + f(z - 2 * h)) / (12 * h);
}

void check_domain(const CaseSpec& s, double z) {
    if (!std::isfinite(z)) throw DomainError("coordinate must be finite");
    if (s.domain == DomainKind::half_line && !(z > 0)) throw DomainError("radial coordinate must be > 0");
    if (s.domain == DomainKind::interval) {
        double period = 2 * M_PI / std::fabs(s.d("alpha"));
        if (z < 0 || z > period) throw DomainError("coordinate outside [0, 2 pi / alpha]");
    }
}

}  // namespace

std::string to_string(CaseId id) {
    for (const auto& [k, v] : names())
        if (k == id) return v;
    return "?";
}

CaseId parse_case_id(const std::string& text) {
    for (const auto& [k, v] : names())
        if (v == text) return k;
    if (text == "X'" || text == "Xalt" || text == "X_ALT") return CaseId::X_alt;
    throw DomainError("unknown case '" + text + "'");
}

const std::vector<CaseId>& all_cases() {
    static const std::vector<CaseId> v = [] {
        std::vector<CaseId> out;
        for (const auto& [k, _] : names()) out.push_back(k);
        return out;
    }();
    return v;
}

const R& CaseSpec::at(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw DomainError("case " + to_string(id) + " has no parameter '" + key + "'");
    return it->second;
}

int CaseSpec::mark() const {
    switch (id) {
        case CaseId::X:
            return as_int(at("n") - at("mu"), "n - mu");
        case CaseId::X_alt:
            return as_int(at("n"), "n") - 1;
        case CaseId::XI:
            return lame_mark(lame_type, as_int(at("m"), "m"));
        default:
            return as_int(at("n"), "n");
    }
}

const std::vector<std::pair<std::string, R>>& case_defaults(CaseId id) {
    using V = std::vector<std::pair<std::string, R>>;
    static const V one{{"alpha", 1}, {"a", 1}, {"b", 1}, {"c", 1}, {"n", 1}};
    static const V three{{"alpha", 1}, {"a", 1}, {"b", 2}, {"c", 1}, {"n", 1}};
    static const V four{{"alpha", 1}, {"a", 1}, {"c", 1}, {"n", 1}, {"p", 0}};
    static const V five{{"alpha", 1}, {"a", 1}, {"b", 1}, {"n", 1}, {"p", 0}};
    static const V six{{"a", 1}, {"b", 0}, {"n", 1}, {"p", 0}};
    static const V radial{{"a", 1}, {"b", 1}, {"c", 0}, {"d", 3}, {"l", 0}, {"n", 1}};
    static const V ten{{"alpha", 1}, {"a", 1}, {"mu", 0}, {"n", 1}};
    static const V ten_alt{{"alpha", 1}, {"a", 1}, {"nu1", 1}, {"nu2", 0}, {"n", 1}};
    static const V lame{{"m", 2}, {"a1", 0}, {"a2", 1}, {"a3", 3}};
    static const V ell1{{"mu", R(1, 4)}, {"g2", 3}, {"g3", 0}, {"n", 1}};
    static const V ell2{{"mu", R(1, 4)}, {"g2", 3}, {"g3", 0}, {"e_k", 0}, {"n", 1}};
    static const V ell3{{"nu", R(1, 4)}, {"g2", 3}, {"g3", 0}, {"e_k", 0}, {"n", 1}};
    switch (id) {
        case CaseId::I:
        case CaseId::II:
            return one;
        case CaseId::III:
            return three;
        case CaseId::IV:
            return four;
        case CaseId::V:
            return five;
        case CaseId::VI:
            return six;
        case CaseId::VII:
        case CaseId::VIII:
        case CaseId::IX:
            return radial;
        case CaseId::X:
            return ten;
        case CaseId::X_alt:
            return ten_alt;
        case CaseId::XI:
            return lame;
        case CaseId::XII_I:
            return ell1;
        case CaseId::XII_II:
            return ell2;
        case CaseId::XII_III:
        default:
            return ell3;
    }
}

CaseSpec make_case(CaseId id, const std::map<std::string, R>& overrides, const std::string& variant) {
    CaseSpec s;
    s.id = id;
    for (const auto& [k, v] : case_defaults(id)) s.params[k] = v;
    for (const auto& [k, v] : overrides) {
        if (!s.params.count(k)) throw DomainError("case " + to_string(id) + " has no parameter '" + k + "'");
        s.params[k] = v;
    }
    s.kind = (id == CaseId::II || id == CaseId::III || id == CaseId::V || id == CaseId::VIII || id == CaseId::IX)
                 ? Kind::second_type
                 : Kind::first_type;
    s.domain = (id == CaseId::VII || id == CaseId::VIII || id == CaseId::IX) ? DomainKind::half_line
               : (id == CaseId::X || id == CaseId::X_alt)                      ? DomainKind::interval
                                                                               : DomainKind::real_line;
    if (id == CaseId::XI) {
        auto [t, i] = parse_variant(variant);
        s.lame_type = t;
        s.lame_index = i;
        require(s.at("a1") == 0, "Lame block requires a1 = 0");
    } else if (!variant.empty()) {
        throw DomainError("solution type applies to case XI only");
    }

    if (s.has("n")) require(as_int(s.at("n"), "n") >= 0, "n must be >= 0");
    if (s.has("p")) require(s.at("p") == 0 || s.at("p") == 1, "p must be 0 or 1");
    if (s.has("alpha")) require(s.at("alpha") != 0, "alpha must be nonzero");
    if (id == CaseId::X) {
        require(s.at("mu") == 0 || s.at("mu") == 1, "mu must be 0 or 1");
        require(s.mark() >= 0, "n - mu must be >= 0");
    }
    if (id == CaseId::X_alt) {
        require(s.at("nu1") + s.at("nu2") == 1 && (s.at("nu1") == 0 || s.at("nu1") == 1),
                "nu1, nu2 must be {0,1} with nu1 + nu2 = 1");
        require(as_int(s.at("n"), "n") >= 1, "n must be >= 1");
    }
    if (id == CaseId::VII || id == CaseId::VIII || id == CaseId::IX) {
        require(as_int(s.at("d"), "d") >= 1, "d must be >= 1");
        require(as_int(s.at("l"), "l") >= 0, "l must be >= 0");
    }
    if (id == CaseId::XI) s.mark();
    return s;
}

DiffOperator<R> case_operator(const CaseSpec& s) {
    auto r = [&](const char* k) { return s.at(k); };
    auto op = [](P p, P q, P rr) { return DiffOperator<R>({rr, q, p}); };
    switch (s.id) {
        case CaseId::I: {
            R al = r("alpha"), a = r("a"), b = r("b"), c = r("c"), n = r("n");
            return op(P{0, 0, -al}, P{-2 * c, 2 * b - al, 2 * a}, P{0, -2 * a * n});
        }
        case CaseId::II: {
            R al = r("alpha"), a = r("a"), b = r("b"), c = r("c"), n = r("n");
            return op(P{0, -al}, P{2 * b + al, -2 * c, -2 * a}, P{0, 2 * a * n});
        }
        case CaseId::III: {
            R al = r("alpha"), a = r("a"), b = r("b"), c = r("c"), n = r("n");
            return op(P{0, 0, 0, -al}, P{-2 * c, -2 * a, 2 * b - al}, P{0, (al * n - 2 * b) * n});
        }
        case CaseId::IV: {
            R al = r("alpha"), a = r("a"), c = r("c"), n = r("n"), p = r("p");
            return op(P{0, 0, 4 * al, -4 * al}, P{4 * a, 4 * (al - a + c), -2 * ((2 * p + 3) * al + 2 * c)},
                      P{0, 2 * n * ((2 * n + 2 * p + 1) * al + 2 * c)});
        }
        case CaseId::V: {
            R al = r("alpha"), a = r("a"), b = r("b"), n = r("n"), p = r("p");
            return op(P{0, 2 * al, -2 * al}, P{2 * (al + a + b), -(2 * a + 4 * b + 2 * p * al + 3 * al), 2 * b},
                      P{b * (2 * n + p), -2 * b * n});
        }
        case CaseId::VI: {
            R a = r("a"), b = r("b"), n = r("n"), p = r("p");
            return op(P{0, -4}, P{-2 - 4 * p, 4 * b, 4 * a}, P{0, -4 * a * n});
        }
        case CaseId::VII: {
            R a = r("a"), b = r("b"), n = r("n"), dc = radial_dc(s);
            return op(P{0, -4}, P{-2 * dc, 4 * b, 4 * a}, P{0, -4 * a * n});
        }
        case CaseId::VIII: {
            R a = r("a"), b = r("b"), n = r("n"), dc = radial_dc(s);
            return op(P{0, -1}, P{1 - dc, 2 * b, 2 * a}, P{0, -2 * a * n});
        }
        case CaseId::IX: {
            R a = r("a"), b = r("b"), n = r("n"), dc = radial_dc(s);
            return op(P{0, 0, -1}, P{-2 * b, 1 - dc, 2 * a}, P{0, -2 * a * n});
        }
        case CaseId::X: {
            R al2 = r("alpha") * r("alpha"), a = r("a"), mu = r("mu"), n = r("n");
            return op(P{-al2, 0, al2}, P{-2 * a * al2, (1 + 2 * mu) * al2, 2 * a * al2},
                      P{0, -2 * al2 * a * (n - mu)});
        }
        case CaseId::X_alt: {
            R al2 = r("alpha") * r("alpha"), a = r("a"), nu = r("nu1") - r("nu2"), n = r("n");
            return op(P{-al2, 0, al2}, P{al2 * (-2 * a - nu), 2 * al2, 2 * a * al2}, P{0, -2 * al2 * a * (n - 1)});
        }
        case CaseId::XI:
            return to_differential_operator(case_element(s));
        default:
            return elliptic_operator(s);
    }
}

DiffOperator<R> elliptic_operator(const CaseSpec& s) {
    require(is_elliptic(s.id), "elliptic_operator applies to case XII only");
    R g2 = s.at("g2"), g3 = s.at("g3"), n = s.at("n");
    P lead{-g3, -g2, 0, 4};
    if (s.id == CaseId::XII_I) {
        R mu = s.at("mu");
        return DiffOperator<R>({P{0, -2 * n * (2 * n + 1 + 6 * mu)}, P{-(1 + 2 * mu) * g2 / 2, 0, 6 * (1 + 2 * mu)}, lead});
    }
    R e = s.at("e_k");
    if (s.id == CaseId::XII_II) {
        R mu = s.at("mu");
        P q{4 * (1 - 2 * mu) * e * e - (3 - 2 * mu) * g2 / 2, 4 * (1 - 2 * mu) * e, 2 * (5 + 2 * mu)};
        return DiffOperator<R>({P{0, -2 * n * (2 * n + 3 + 2 * mu)}, q, lead});
    }
    R nu = s.at("nu");
    P q{4 * (2 * nu - 1) * e * e - (5 + 2 * nu) * g2 / 2, 4 * (2 * nu - 1) * e, 2 * (7 - 2 * nu)};
    return DiffOperator<R>({P{0, -2 * n * (2 * n + 5 - 2 * nu)}, q, lead});
}

Sl2Element<R> case_element(const CaseSpec& s) {
    if (s.id == CaseId::XI)
        return lame_element(as_int(s.at("m"), "m"), s.at("a1"), s.at("a2"), s.at("a3"), s.lame_type, s.lame_index);
    return element_from_operator(case_operator(s), R(s.mark()));
}

int block_size(const CaseSpec& s) {
    int k = s.mark();
    require(k >= 0, "block mark must be >= 0");
    return k + 1;
}

BandMatrix<R> band_matrix(const CaseSpec& s) { return matrix_in_monomial_basis(case_operator(s), block_size(s)); }

Polynomial<R> characteristic_equation(const CaseSpec& s) { return char_poly(band_matrix(s)); }

bool has_coordinate_form(const CaseSpec& s) { return s.id != CaseId::XI && !is_elliptic(s.id); }
bool is_radial(const CaseSpec& s) { return s.domain == DomainKind::half_line; }

Rational potential_constant(const CaseSpec& s) {
    auto r = [&](const char* k) { return s.at(k); };
    switch (s.id) {
        case CaseId::I:
            return r("b") * r("b") - 2 * r("a") * r("c");
        case CaseId::II:
            return (r("b") + r("alpha")) * (r("b") + r("alpha"));
        case CaseId::III:
            return (r("b") - r("alpha") * r("n")) * (r("b") - r("alpha") * r("n"));
        case CaseId::IV:
            return r("c") * r("c") + r("a") * r("alpha") - 2 * r("a") * r("c") - 2 * r("a") * r("alpha") * r("p");
        case CaseId::V:
            return (r("a") + r("b")) * (r("a") + r("b"));
        case CaseId::VI:
            return -r("b") * (2 * r("p") + 1);
        case CaseId::VII:
            return -r("b") * radial_dc(s);
        case CaseId::VIII:
            return r("b") * r("b") - r("a") * (2 * r("n") + radial_dc(s));
        case CaseId::IX:
            return r("a") * r("a");
        case CaseId::X:
            return -2 * r("alpha") * r("alpha") * r("mu");
        case CaseId::X_alt:
            return R(0);
        default:
            throw DomainError("case " + to_string(s.id) + " has no coordinate potential");
    }
}

double potential(const CaseSpec& s, double z, bool include_constant) {
    Model m = build_model(s);
    check_domain(s, z);
    return m.v_phys(z) - (include_constant ? 0.0 : m.K);
}

double centrifugal(const CaseSpec& s, double r) {
    if (!is_radial(s)) return 0.0;
    double D = s.d("d") + 2 * s.d("l");
    return (D - 1) * (D - 3) / (4 * r * r);
}

double frame_potential(const CaseSpec& s, double z, bool include_constant) {
    return potential(s, z, include_constant) + centrifugal(s, z);
}

double spectral_weight(const CaseSpec& s, double z) {
    Model m = build_model(s);
    check_domain(s, z);
    return m.w(z);
}

GaugeMap gauge(const CaseSpec& s) {
    Model m = build_model(s);
    GaugeMap gm;
    gm.x_of_z = m.x;
    gm.dx_of_z = m.dx;
    gm.ddx_of_z = m.ddx;
    gm.A_of_z = m.A;
    gm.dA_of_z = m.dA;
    gm.ddA_of_z = m.ddA;
    Fn dA = m.dA;
    gm.y_of_z = [dA](double z) { return -dA(z); };
    switch (s.id) {
        case CaseId::II:
        case CaseId::V:
            gm.rho_of_x = [](double x) { return x; };
            break;
        case CaseId::III:
        case CaseId::VIII:
            gm.rho_of_x = [](double x) { return 1.0 / x; };
            break;
        case CaseId::IX:
            gm.rho_of_x = [](double x) { return 1.0 / (x * x); };
            break;
        default:
            gm.rho_of_x = [](double) { return 1.0; };
    }
    gm.spectral_scale = s.id == CaseId::II || s.id == CaseId::III ? s.d("alpha")
                        : s.id == CaseId::V                      ? -2 * s.d("alpha")
                        : s.kind == Kind::second_type             ? 1.0
                                                                  : m.w(1.0);
    return gm;
}

double energy_of(const CaseSpec& s, double eps, bool include_constant) {
    switch (s.id) {
        case CaseId::I:
        case CaseId::IV:
        case CaseId::VI:
        case CaseId::VII:
        case CaseId::X:
        case CaseId::X_alt: {
            double w = build_model(s).w(1.0);
            return w * eps - (include_constant ? 0.0 : potential_constant(s).get_d());
        }
        case CaseId::VIII:
            return s.d("a") * (2 * s.d("n") + radial_dc(s).get_d()) - s.d("b") * s.d("b");
        case CaseId::IX:
            return -s.d("a") * s.d("a");
        default:
            return eps;
    }
}

std::vector<AlgebraicEigenpair> algebraic_eigenpairs(const CaseSpec& s) {
    SpectrumResult res = eigen(band_matrix(s));
    std::vector<AlgebraicEigenpair> out;
    for (std::size_t i = 0; i < res.eigenvectors.size(); ++i) {
        AlgebraicEigenpair e;
        e.eps = res.eigenvector_values[i];
        e.poly = res.eigenvectors[i];
        e.energy = energy_of(s, e.eps, false);
        e.energy_full = energy_of(s, e.eps, true);
        e.charge = s.id == CaseId::VIII ? s.d("b") * (radial_dc(s).get_d() - 1) + e.eps : e.eps;
        out.push_back(std::move(e));
    }
    if (s.kind == Kind::first_type)
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
    else
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.eps > b.eps; });
    return out;
}

double assemble_eigenfunction(const CaseSpec& s, const AlgebraicEigenpair& pair, double z) {
    if (s.id == CaseId::XI) {
        double xi = z;
        return lame_prefactor(s.lame_type, s.lame_index, s.d("a1"), s.d("a2"), s.d("a3"), xi) * pair.poly.eval(xi);
    }
    if (is_elliptic(s.id)) return pair.poly.eval(z);
    Model m = build_model(s);
    check_domain(s, z);
    double v = pair.poly.eval(m.x(z)) * std::exp(-m.A(z));
    if (m.radial) v *= std::pow(z, m.radial_power);
    return v;
}

bool normalizable(const CaseSpec& s) {
    auto g = [&](const char* k) { return s.d(k); };
    switch (s.id) {
        case CaseId::I:
            if (g("alpha") <= 0) return false;
            if (g("a") > 0 && g("c") > 0) return true;
            return g("a") == 0 && g("c") > 0 && g("b") > g("alpha") * g("n");
        case CaseId::II:
            return g("a") / g("alpha") < 0 && (g("b") + g("alpha")) / g("alpha") < 0;
        case CaseId::III:
            return g("c") / g("alpha") > 0 && (g("b") - g("n") * g("alpha")) / g("alpha") > 0;
        case CaseId::IV:
            return g("alpha") > 0 && (g("a") > 0 || (g("a") == 0 && g("c") > 0));
        case CaseId::V:
            return (g("a") + g("b")) / g("alpha") > 0;
        case CaseId::VI:
            return g("a") > 0 || (g("a") == 0 && g("b") > 0);
        case CaseId::VII:
            return (g("a") > 0 || (g("a") == 0 && g("b") > 0)) && g("d") + g("l") - g("c") > 1;
        case CaseId::VIII:
            return g("a") >= 0 && g("b") > 0 && radial_dc(s).get_d() > 2;
        case CaseId::IX:
            return g("a") > 0 && g("b") >= 0;
        case CaseId::X:
        case CaseId::X_alt:
            return g("a") != 0;
        default:
            throw DomainError("case " + to_string(s.id) + " has no coordinate realization");
    }
}

double residual(const CaseSpec& s, const AlgebraicEigenpair& pair, const std::vector<double>& grid, double h) {
    if (grid.empty()) throw DomainError("empty grid");
    if (is_elliptic(s.id)) {
        auto op = to_double(case_operator(s));
        auto img = op.apply(pair.poly) - pair.poly * pair.eps;
        double worst = 0.0;
        for (double t : grid) worst = std::max(worst, std::fabs(img.eval(t)) / (1 + std::fabs(pair.poly.eval(t))));
        return worst;
    }
    if (s.id == CaseId::XI) {
        double a1 = s.d("a1"), a2 = s.d("a2"), a3 = s.d("a3"), m = s.d("m");
        double top = std::max({a1, a2, a3});
        auto eta = [&](double xi) { return assemble_eigenfunction(s, pair, xi); };
        double scale = 0.0;
        for (double xi : grid) {
            if (!(xi - 2 * h > top)) throw DomainError("Lame residual grid must lie above max(a_i)");
            scale = std::max(scale, std::fabs(eta(xi)));
        }
        if (scale == 0.0) scale = 1.0;
        double worst = 0.0;
        for (double xi : grid) {
            double p3 = (xi - a1) * (xi - a2) * (xi - a3);
            double dp3 = (xi - a2) * (xi - a3) + (xi - a1) * (xi - a3) + (xi - a1) * (xi - a2);
            auto f = [&](double t) { return eta(t) / scale; };
            double f0 = f(xi), d2 = second_derivative(f, xi, h), d1 = first_derivative(f, xi, h);
            double r = 4 * p3 * d2 + 2 * dp3 * d1 - (m * (m + 1) * xi + pair.eps) * f0;
            worst = std::max(worst, std::fabs(r) / (1 + std::fabs(f0)));
        }
        return worst;
    }
    Model m = build_model(s);
    auto psi = [&](double z) { return pair.poly.eval(m.x(z)) * std::exp(-m.A(z)); };
    double scale = 0.0;
    for (double z : grid) {
        check_domain(s, z);
        scale = std::max(scale, std::fabs(psi(z)));
    }
    if (scale == 0.0) scale = 1.0;
    double worst = 0.0;
    for (double z : grid) {
        auto f = [&](double t) { return psi(t) / scale; };
        double f0 = f(z), d2 = second_derivative(f, z, h);
        double v = m.v_phys(z) + (m.radial ? m.centrifugal_coeff / (z * z) : 0.0);
        double r = -d2 + (v - m.w(z) * pair.eps) * f0;
        worst = std::max(worst, std::fabs(r) / (1 + std::fabs(f0)));
    }
    return worst;
}

Polynomial<R> exact_residual(const CaseSpec& s, const R& eps, const Polynomial<R>& p) {
    return case_operator(s).apply(p) - p * eps;
}

}  // namespace qes
