/// @file classical.cpp
/// @brief Classical families as Borel elements, monic eigenpolynomials, factorized forms.
#include "qes/classical.hpp"

#include "qes/lattice.hpp"

namespace qes {

namespace {

using R = Rational;
using P = Polynomial<Rational>;
using Op = DiffOperator<Rational>;

void check_parity(int p) {
    if (p != 0 && p != 1) throw DomainError("parity p must be 0 or 1");
}

/// Monic eigenpolynomial of the given degree for an element preserving the flag of polynomial spaces.
P monic_eigenpolynomial(const Sl2Element<R>& e, int degree) {
    if (degree < 0) throw DomainError("degree must be >= 0");
    const auto m = matrix_in_monomial_basis(e, degree + 1);
    return P(triangular_eigenvector(m, degree));
}

/// p(x^2) x^s
P substitute_square(const P& p, int s) {
    std::vector<R> c(static_cast<std::size_t>(2 * std::max(p.degree(), 0) + s + 1), R(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(2 * i + s)] = p.coeff(i);
    return P(std::move(c));
}

}  // namespace

FamilySpec FamilySpec::hermite(int p) {
    check_parity(p);
    FamilySpec s;
    s.family = Family::hermite;
    s.p = p;
    return s;
}

FamilySpec FamilySpec::hermite_x() {
    FamilySpec s;
    s.family = Family::hermite_x;
    return s;
}

FamilySpec FamilySpec::laguerre(const R& a) {
    FamilySpec s;
    s.family = Family::laguerre;
    s.a = a;
    return s;
}

FamilySpec FamilySpec::legendre() {
    FamilySpec s;
    s.family = Family::legendre;
    return s;
}

FamilySpec FamilySpec::legendre_gauged(int p) {
    check_parity(p);
    FamilySpec s;
    s.family = Family::legendre_gauged;
    s.p = p;
    return s;
}

FamilySpec FamilySpec::jacobi_sym(const R& a, const R& b) {
    FamilySpec s;
    s.family = Family::jacobi_sym;
    s.a = a;
    s.b = b;
    return s;
}

FamilySpec FamilySpec::jacobi_asym(const R& a, const R& b) {
    FamilySpec s = jacobi_sym(a, b);
    s.family = Family::jacobi_asym;
    return s;
}

FamilySpec FamilySpec::mathieu(int variant, const R& alpha) {
    if (variant < 0 || variant > 3) throw DomainError("Mathieu variant must be 0..3");
    FamilySpec s;
    s.family = Family::mathieu;
    s.variant = variant;
    s.alpha = alpha;
    return s;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::hermite:
            return "hermite";
        case Family::hermite_x:
            return "hermite_x";
        case Family::laguerre:
            return "laguerre";
        case Family::legendre:
            return "legendre";
        case Family::legendre_gauged:
            return "legendre_gauged";
        case Family::jacobi_sym:
            return "jacobi_sym";
        case Family::jacobi_asym:
            return "jacobi_asym";
        case Family::mathieu:
        default:
            return "mathieu";
    }
}

Family parse_family(const std::string& name) {
    for (auto f : {Family::hermite, Family::hermite_x, Family::laguerre, Family::legendre, Family::legendre_gauged,
                   Family::jacobi_sym, Family::jacobi_asym, Family::mathieu})
        if (to_string(f) == name) return f;
    throw DomainError("unknown polynomial family: " + name);
}

Sl2Element<R> mathieu_algebraic(int variant, const R& alpha) {
    if (variant < 0 || variant > 3) throw DomainError("Mathieu variant must be 0..3");
    const R a2 = alpha * alpha;
    Sl2Element<R> e;
    e.add_j0j0(-a2);
    e.c_mm = a2;
    switch (variant) {
        case 1:  // -a^2 (J0J0 - J-J- + 2J0 + 1)
            e.c_0 += -a2;
            e.c_const += -a2;
            break;
        case 2:  // a^2 (-J0J0 + J-J- - J0 - J- - 1/4)
            e.c_0 += -a2 / 2;
            e.c_m = -a2;
            e.c_const += -a2 / 4;
            break;
        case 3:  // a^2 (-J0J0 + J-J- - J0 + J- - 1/4)
            e.c_0 += -a2 / 2;
            e.c_m = a2;
            e.c_const += -a2 / 4;
            break;
        default:
            break;
    }
    return e;
}

R mathieu_eigenvalue(int variant, const R& alpha, int k) {
    const R a2 = alpha * alpha;
    switch (variant) {
        case 0:
            return -a2 * k * k;
        case 1:
            return -a2 * (k + 1) * (k + 1);
        case 2:
        case 3:
            return -a2 * (R(k) + R(1, 2)) * (R(k) + R(1, 2));
        default:
            throw DomainError("Mathieu variant must be 0..3");
    }
}

Sl2Element<R> family_element(const FamilySpec& s) {
    Sl2Element<R> e;
    switch (s.family) {
        case Family::hermite:  // -4J0J- + 4J0 - 2(1+2p)J- + 2p
            check_parity(s.p);
            e.c_0m = -2;
            e.c_0 = 2;
            e.c_m = -2 * (1 + 2 * s.p);
            e.c_const = 2 * s.p;
            break;
        case Family::hermite_x:  // -J-J- + 2J0
            e.c_mm = -1;
            e.c_0 = 1;
            break;
        case Family::laguerre:  // -J0J- + J0 - (a+1)J-
            e.c_0m = R(-1, 2);
            e.c_0 = R(1, 2);
            e.c_m = -(s.a + 1);
            break;
        case Family::legendre:  // -J0J0 + J-J- - J0
            e.add_j0j0(-1);
            e.c_mm = 1;
            e.c_0 += R(-1, 2);
            break;
        case Family::legendre_gauged:  // -4J0J0 + 4J0J- - 2(1+2p)J0 + 2(1+2p)J-
            check_parity(s.p);
            e.add_j0j0(-4);
            e.c_0m = 2;
            e.c_0 += -(1 + 2 * s.p);
            e.c_m = 2 * (1 + 2 * s.p);
            break;
        case Family::jacobi_sym:  // -J0J0 + J-J- - (1+a+b)J0 + (b-a)J-
            e.add_j0j0(-1);
            e.c_mm = 1;
            e.c_0 += -(1 + s.a + s.b) / 2;
            e.c_m = s.b - s.a;
            break;
        case Family::jacobi_asym:  // -J0J0 + J0J- - (1+a+b)J0 + (a+1)J-
            e.add_j0j0(-1);
            e.c_0m = R(1, 2);
            e.c_0 += -(1 + s.a + s.b) / 2;
            e.c_m = s.a + 1;
            break;
        case Family::mathieu:
            return mathieu_algebraic(s.variant, s.alpha);
    }
    return e;
}

R family_eigenvalue(const FamilySpec& s, int k) {
    if (k < 0) throw DomainError("degree must be >= 0");
    switch (s.family) {
        case Family::hermite:
            return 4 * k + 2 * s.p;
        case Family::hermite_x:
            return 2 * k;
        case Family::laguerre:
            return k;
        case Family::legendre:
            return -k * (k + 1);
        case Family::legendre_gauged: {
            const int m = 2 * k + s.p;
            return -m * (m + 1) + 2 * s.p;
        }
        case Family::jacobi_sym:
        case Family::jacobi_asym:
            return -k * (k + s.a + s.b + 1);
        case Family::mathieu:
        default:
            return mathieu_eigenvalue(s.variant, s.alpha, k);
    }
}

P generate_polynomial(const FamilySpec& s, int degree) { return monic_eigenpolynomial(family_element(s), degree); }

bool hermite_laguerre_identity(int n, int p) {
    check_parity(p);
    const P lhs = generate_polynomial(FamilySpec::hermite_x(), 2 * n + p);
    const P rhs = substitute_square(generate_polynomial(FamilySpec::laguerre(R(-1, 2) + p), n), p);
    return lhs == rhs.monic() && generate_polynomial(FamilySpec::hermite(p), n) ==
                                     generate_polynomial(FamilySpec::laguerre(R(-1, 2) + p), n);
}

bool legendre_jacobi_identity(int n, int p) {
    check_parity(p);
    const P lhs = generate_polynomial(FamilySpec::legendre(), 2 * n + p);
    const P jac = generate_polynomial(FamilySpec::jacobi_asym(R(-1, 2) + p, 0), n);
    return lhs == substitute_square(jac, p).monic() && generate_polynomial(FamilySpec::legendre_gauged(p), n) == jac;
}

bool factorization_check(const FamilySpec& s) {
    const R zero = 0;
    const Op j0 = generator_operator(Generator::zero, zero);
    const Op jm = generator_operator(Generator::minus, zero);
    const Op one = Op::identity();
    Op lhs = to_differential_operator(family_element(s)), rhs;
    switch (s.family) {
        case Family::laguerre:
            lhs = lhs + one * (s.a + 1);
            rhs = (j0 + one * (s.a + 1)) * (jm - one) * R(-1);
            break;
        case Family::hermite:
            lhs = lhs + one * R(2 * (1 + s.p));
            rhs = (j0 * R(2) + one * R(1 + 2 * s.p)) * (jm - one) * R(-2);
            break;
        case Family::legendre_gauged:
            rhs = (j0 * R(2) + one * R(1 + 2 * s.p)) * (j0 - jm) * R(-2);
            break;
        case Family::hermite_x:
            return false;
        default:
            throw DomainError("no factorized form for family " + to_string(s.family));
    }
    for (int k = 0; k <= 8; ++k)
        if (!(lhs.apply(P::monomial(k)) == rhs.apply(P::monomial(k)))) return false;
    return true;
}

}  // namespace qes
