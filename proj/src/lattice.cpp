/// @file lattice.cpp
/// @brief Normal ordering, Fock action, lattice realizations and three-point stencils.
#include "qes/lattice.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace qes {

namespace {

using R = Rational;
using P = Polynomial<Rational>;

R binomial(int n, int k) {
    R b = 1;
    for (int i = 0; i < k; ++i) b = b * R(n - i) / R(i + 1);
    return b;
}

R factorial(int k) {
    R f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

R rational_pow(const R& q, int k) {
    R out = 1;
    const R base = k >= 0 ? q : R(1) / q;
    for (int i = 0; i < std::abs(k); ++i) out *= base;
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    HWExpression parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    HWExpression expr() {
        skip();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = s_[pos_++] == '-';
        HWExpression e = term();
        if (neg) e = e * R(-1);
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') return e;
            ++pos_;
            HWExpression t = term();
            e = c == '+' ? e + t : e - t;
        }
    }
    HWExpression term() {
        HWExpression e = factor();
        for (;;) {
            skip();
            char c = peek();
            if (c == '*') {
                ++pos_;
                e = e * factor();
            } else if (c == '/') {
                ++pos_;
                skip();
                R d = number();
                if (is_zero(d)) fail("division by zero");
                e = e * (R(1) / d);
            } else if (c == 'a' || c == 'b' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                e = e * factor();
            } else {
                return e;
            }
        }
    }
    HWExpression factor() {
        skip();
        HWExpression base;
        char c = peek();
        if (c == 'a' || c == 'b') {
            ++pos_;
            base = c == 'a' ? HWExpression::letter_a() : HWExpression::letter_b();
        } else if (c == '(') {
            ++pos_;
            base = expr();
            skip();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            base = HWExpression::constant(number());
        } else {
            fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
        }
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("missing exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }
    R number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
        if (start == pos_) fail("expected a number");
        return parse_rational(s_.substr(start, pos_ - start));
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("cannot parse HW expression at position " + std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

HWExpression HWExpression::constant(const R& c) { return term(0, 0, c); }
HWExpression HWExpression::letter_a(int power) { return term(0, power); }
HWExpression HWExpression::letter_b(int power) { return term(power, 0); }
HWExpression HWExpression::term(int p, int q, const R& c) {
    if (p < 0 || q < 0) throw DomainError("negative letter power");
    HWExpression e;
    e.add(p, q, c);
    return e;
}

void HWExpression::add(int p, int q, const R& c) {
    if (qes::is_zero(c)) return;
    auto it = terms_.find({p, q});
    if (it == terms_.end()) {
        R v = c;
        v.canonicalize();
        terms_.emplace(Key{p, q}, v);
        return;
    }
    it->second += c;
    if (qes::is_zero(it->second)) terms_.erase(it);
}

R HWExpression::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? R(0) : it->second;
}

int HWExpression::grading() const {
    int g = -1000000;
    for (const auto& [k, c] : terms_) g = std::max(g, k.first - k.second);
    return g;
}

int HWExpression::max_a_power() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

HWExpression& HWExpression::operator+=(const HWExpression& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

HWExpression operator*(const HWExpression& x, const R& s) {
    HWExpression out;
    for (const auto& [k, c] : x.terms_) out.add(k.first, k.second, c * s);
    return out;
}

HWExpression operator*(const HWExpression& x, const HWExpression& y) {
    HWExpression out;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) {
            const int q = kx.second, r = ky.first;
            for (int k = 0; k <= std::min(q, r); ++k)
                out.add(kx.first + r - k, q - k + ky.second, cx * cy * binomial(q, k) * binomial(r, k) * factorial(k));
        }
    return out;
}

HWExpression HWExpression::pow(int k) const {
    if (k < 0) throw DomainError("negative power of an HW expression");
    HWExpression out = constant(1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::string HWExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        R mag = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const bool bare = k.first == 0 && k.second == 0;
        if (bare || mag != 1) os << to_string(R(mag)) << (bare ? "" : " ");
        auto letter = [&](char l, int p) {
            if (p == 0) return;
            os << l;
            if (p > 1) os << '^' << p;
        };
        letter('b', k.first);
        if (k.first && k.second) os << ' ';
        letter('a', k.second);
        first = false;
    }
    return os.str();
}

HWExpression commutator(const HWExpression& x, const HWExpression& y) { return x * y - y * x; }

HWExpression normal_order(const std::string& text) { return Parser(text).parse(); }

Polynomial<R> fock_apply(const HWExpression& l, const P& phi) {
    P out;
    for (const auto& [k, c] : l.terms())
        for (int j = k.second; j <= phi.degree(); ++j) {
            // a^q b^j |0> = j!/(j-q)! b^(j-q) |0>
            R f = c * phi.coeff(j);
            for (int i = 0; i < k.second; ++i) f *= j - i;
            out += P::monomial(k.first + j - k.second, f);
        }
    return out;
}

DiffOperator<R> to_differential_operator(const HWExpression& l) {
    std::vector<P> c(static_cast<std::size_t>(l.max_a_power()) + 1);
    for (const auto& [k, v] : l.terms()) c[static_cast<std::size_t>(k.second)] += P::monomial(k.first, v);
    return DiffOperator<R>(std::move(c));
}

HWTriple sl2_from_hw(const R& n) {
    const auto a = HWExpression::letter_a(), b = HWExpression::letter_b();
    return {b * b * a - b * n, b * a - HWExpression::constant(n / 2), a};
}

HWExpression element_to_hw(const Sl2Element<R>& e) {
    const auto [jp, j0, jm] = sl2_from_hw(e.n);
    return jp * jp * e.c_pp + jp * j0 * (2 * e.c_p0) + jp * jm * (2 * e.c_pm) + j0 * jm * (2 * e.c_0m) +
           jm * jm * e.c_mm + jp * e.c_p + j0 * (2 * e.c_0) + jm * e.c_m + HWExpression::constant(e.c_const);
}

HWExpression hw_casimir(const R& n) {
    const auto [jp, j0, jm] = sl2_from_hw(n);
    return (jp * jm + jm * jp) * R(1, 2) - j0 * j0;
}

double qnumber(int k, double q) {
    if (q == 1.0) return k;
    return (1.0 - std::pow(q, k)) / (1.0 - q);
}

R qnumber(int k, const R& q) {
    if (q == 1) return k;
    return (1 - rational_pow(q, k)) / (1 - q);
}

R qfactorial(int k, const R& q) {
    R f = 1;
    for (int i = 1; i <= k; ++i) f *= qnumber(i, q);
    return f;
}

Realization Realization::exponential(const R& q) {
    if (sgn(q) <= 0 || q == 1) throw DomainError("q must be positive and different from 1");
    return {RealizationKind::exponential, 1, q};
}

std::string to_string(RealizationKind k) {
    switch (k) {
        case RealizationKind::uniform:
            return "uniform";
        case RealizationKind::exponential:
            return "exponential";
        case RealizationKind::continuum:
        default:
            return "continuum";
    }
}

namespace {

void validate(const Realization& r) {
    if (r.kind == RealizationKind::uniform && is_zero(r.delta)) throw DomainError("lattice spacing must be nonzero");
    if (r.kind == RealizationKind::exponential && (sgn(r.q) <= 0 || r.q == 1))
        throw DomainError("q must be positive and different from 1");
}

}  // namespace

P basis_polynomial(int k, const Realization& r) {
    validate(r);
    switch (r.kind) {
        case RealizationKind::uniform: {
            P out = P::constant(1);
            for (int i = 0; i < k; ++i) out = out * P{R(-i) * r.delta, R(1)};
            return out;
        }
        case RealizationKind::exponential:
            return P::monomial(k, factorial(k) / qfactorial(k, r.q));
        case RealizationKind::continuum:
        default:
            return P::monomial(k);
    }
}

P to_polynomial(const std::vector<R>& coeffs, const Realization& r) {
    P out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!is_zero(coeffs[k])) out += basis_polynomial(static_cast<int>(k), r) * coeffs[k];
    return out;
}

std::vector<R> from_polynomial(const P& p, const Realization& r) {
    std::vector<R> c(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), R(0));
    P rest = p;
    for (int k = p.degree(); k >= 0; --k) {
        const P e = basis_polynomial(k, r);
        const R ck = rest.coeff(k) / e.leading();
        c[static_cast<std::size_t>(k)] = ck;
        if (!is_zero(ck)) rest -= e * ck;
    }
    return c;
}

double evaluate(const std::vector<R>& coeffs, const Realization& r, double x) {
    return to_polynomial(coeffs, r).eval(x);
}

std::vector<R> basis_transport(const std::vector<R>& coeffs, const Realization& from, const Realization& to) {
    validate(from);
    validate(to);
    return coeffs;
}

P apply_a(const P& f, const Realization& r) {
    validate(r);
    switch (r.kind) {
        case RealizationKind::uniform:
            return (f.compose_affine(1, r.delta) - f) * (R(1) / r.delta);
        case RealizationKind::exponential: {
            P out;
            for (int k = 1; k <= f.degree(); ++k) out += P::monomial(k - 1, f.coeff(k) * qnumber(k, r.q));
            return out;
        }
        case RealizationKind::continuum:
        default:
            return f.derivative();
    }
}

P apply_b(const P& f, const Realization& r) {
    validate(r);
    switch (r.kind) {
        case RealizationKind::uniform:
            return P::monomial(1) * f.compose_affine(1, -r.delta);
        case RealizationKind::exponential: {
            P out;
            for (int k = 0; k <= f.degree(); ++k)
                out += P::monomial(k + 1, f.coeff(k) * R(k + 1) / qnumber(k + 1, r.q));
            return out;
        }
        case RealizationKind::continuum:
        default:
            return P::monomial(1) * f;
    }
}

P apply(const HWExpression& l, const P& f, const Realization& r) {
    P out;
    for (const auto& [k, c] : l.terms()) {
        P g = f;
        for (int i = 0; i < k.second; ++i) g = apply_a(g, r);
        for (int i = 0; i < k.first; ++i) g = apply_b(g, r);
        out += g * c;
    }
    return out;
}

BandMatrix<R> realize(const HWExpression& l, const Realization& r, int basis_size) {
    if (basis_size < 1) throw DomainError("basis_size must be >= 1");
    BandMatrix<R> m(basis_size);
    for (int j = 0; j < basis_size; ++j) {
        const auto img = from_polynomial(apply(l, basis_polynomial(j, r), r), r);
        for (int i = 0; i < basis_size && i < static_cast<int>(img.size()); ++i) m.set(i, j, img[static_cast<std::size_t>(i)]);
    }
    return m;
}

P LatticeStencil::apply(const P& f) const {
    return a * f.compose_affine(1, delta) - b * f + c * f.compose_affine(1, -delta);
}

double LatticeStencil::apply(const std::function<double(double)>& f, double x) const {
    const double d = to_double(delta);
    return a.eval(x) * f(x + d) - b.eval(x) * f(x) + c.eval(x) * f(x - d);
}

HahnParameters HahnParameters::hahn(const R& n_points, const R& alpha, const R& beta) {
    return {-1, n_points - 2 - beta, -alpha - beta - 1, (beta + 1) * (n_points - 1), 1};
}

HahnParameters HahnParameters::continued_hahn(const R& n_points, const R& mu, const R& nu) {
    return {1, 2 - 2 * n_points - nu, 1 - 2 * n_points - mu - nu, (n_points + nu - 1) * (n_points - 1), 1};
}

HahnParameters HahnParameters::meixner(const R& mu, const R& gamma) { return {0, -mu, mu - 1, gamma * mu, 1}; }

HahnParameters HahnParameters::charlier(const R& mu) { return {0, 0, -1, mu, 1}; }

HWExpression hahn_hw(const HahnParameters& h) {
    const auto a = HWExpression::letter_a(), b = HWExpression::letter_b();
    const auto ba = b * a;
    return ba * ba * (a * h.delta + HWExpression::constant(1)) * h.a1 + b * a * a * h.a2 + ba * h.a3 + a * h.a4;
}

LatticeStencil hahn_operator(const HahnParameters& h) {
    if (is_zero(h.delta)) throw DomainError("lattice spacing must be nonzero");
    const R& d = h.delta;
    const R s = 1 / (d * d);
    P up{h.a4 * d, h.a2, h.a1};
    P mid{h.a4 * d, 2 * h.a2 - d * h.a1 - d * h.a3, 2 * h.a1};
    P down{0, h.a2 - d * h.a1 - d * h.a3, h.a1};
    return {up * s, mid * s, down * s, d};
}

R hahn_eigenvalue(const HahnParameters& h, int k) { return h.a1 * k * k + h.a3 * k; }

HWExpression hahn_qes_hw(const R& a_plus, const HahnParameters& h, int n) {
    if (n < 0) throw DomainError("n must be a non-negative integer");
    const auto a = HWExpression::letter_a(), b = HWExpression::letter_b();
    const auto ba = b * a;
    return (b * b * a - b * R(n) + ba * ba) * (h.delta * a_plus) + hahn_hw(h);
}

BandMatrix<R> hahn_qes_operator(const R& a_plus, const HahnParameters& h, int n) {
    const auto l = hahn_qes_hw(a_plus, h, n);
    for (int k = 0; k <= n; ++k)
        if (fock_apply(l, P::monomial(k)).degree() > n)
            throw InconsistencyError("operator does not preserve P_" + std::to_string(n));
    return realize(l, Realization::continuum(), n + 1);
}

std::vector<R> triangular_eigenvector(const BandMatrix<R>& m, int k) {
    if (k < 0 || k >= m.size()) throw DomainError("eigenvector index out of range");
    if (m.lower_bandwidth() != 0) throw DomainError("block is not upper triangular");
    const R lam = m(k, k);
    std::vector<R> c(static_cast<std::size_t>(k) + 1, R(0));
    c[static_cast<std::size_t>(k)] = 1;
    for (int i = k - 1; i >= 0; --i) {
        R acc = 0;
        for (int j = i + 1; j <= k; ++j) acc += m(i, j) * c[static_cast<std::size_t>(j)];
        const R diag = lam - m(i, i);
        if (is_zero(diag)) {
            if (!is_zero(acc)) throw DegeneracyError("no polynomial eigenvector for a repeated diagonal entry");
            c[static_cast<std::size_t>(i)] = 0;
            continue;
        }
        c[static_cast<std::size_t>(i)] = acc / diag;
    }
    return c;
}

Polynomial<double> apply_q_generator(Generator g, int n, double q, const Polynomial<double>& p, bool scaled) {
    if (q <= 0.0) throw DomainError("q must be positive");
    const double n_hat = qnumber(n, q) * qnumber(n + 1, q) / qnumber(2 * n + 2, q);
    double s = 1.0;
    if (scaled)
        s = g == Generator::zero ? std::pow(q, -n) / (q + 1) * qnumber(2 * n + 2, q) / qnumber(n + 1, q)
                                 : std::pow(q, -0.5 * n);
    Polynomial<double> out;
    for (int k = 0; k <= p.degree(); ++k) {
        const double c = p.coeff(k) * s;
        switch (g) {
            case Generator::plus:
                out += Polynomial<double>::monomial(k + 1, c * (qnumber(k, q) - qnumber(n, q)));
                break;
            case Generator::zero:
                out += Polynomial<double>::monomial(k, c * (qnumber(k, q) - n_hat));
                break;
            case Generator::minus:
                if (k > 0) out += Polynomial<double>::monomial(k - 1, c * qnumber(k, q));
                break;
        }
    }
    return out;
}

double q_relation_defect(int n, double q, int basis_size) {
    auto j = [&](Generator g, const Polynomial<double>& p) { return apply_q_generator(g, n, q, p, true); };
    auto err = [](const Polynomial<double>& p) {
        double m = 0;
        for (double c : p.coeffs()) m = std::max(m, std::fabs(c));
        return m;
    };
    using G = Generator;
    double worst = 0;
    for (int k = 0; k < basis_size; ++k) {
        const auto x = Polynomial<double>::monomial(k);
        worst = std::max(worst, err(j(G::zero, j(G::minus, x)) * q - j(G::minus, j(G::zero, x)) + j(G::minus, x)));
        worst = std::max(worst, err(j(G::plus, j(G::minus, x)) * (q * q) - j(G::minus, j(G::plus, x)) +
                                    j(G::zero, x) * (q + 1)));
        worst = std::max(worst, err(j(G::zero, j(G::plus, x)) - j(G::plus, j(G::zero, x)) * q - j(G::plus, x)));
    }
    return worst;
}

std::string lattice_samples_csv(const std::vector<R>& coeffs, const Realization& r, double x0, double step,
                                int count) {
    const auto p = to_double(to_polynomial(coeffs, r));
    std::ostringstream os;
    os.precision(17);
    os << "x,f\n";
    for (int i = 0; i < count; ++i) {
        const double x = x0 + step * i;
        os << x << ',' << p.eval(x) << '\n';
    }
    return os.str();
}

}  // namespace qes
