/// @file test_classical.cpp
/// @brief Classical families, Mathieu forms, factorizations.
#include "doctest.h"
#include "qes/classical.hpp"
#include "qes/spectral.hpp"

using namespace qes;
using Q = Rational;
using P = Polynomial<Rational>;

namespace {

std::vector<FamilySpec> families() {
    return {FamilySpec::hermite(0),           FamilySpec::hermite(1),
            FamilySpec::hermite_x(),          FamilySpec::laguerre(Q(3, 2)),
            FamilySpec::legendre(),           FamilySpec::legendre_gauged(0),
            FamilySpec::legendre_gauged(1),   FamilySpec::jacobi_sym(Q(1, 2), Q(-1, 3)),
            FamilySpec::jacobi_asym(2, Q(1, 5)), FamilySpec::mathieu(0, 2),
            FamilySpec::mathieu(1, Q(1, 2)),  FamilySpec::mathieu(2, 3),
            FamilySpec::mathieu(3, 1)};
}

}  // namespace

TEST_CASE("family elements are exactly solvable with the closed-form spectra") {
    for (const auto& f : families()) {
        const auto e = family_element(f);
        CHECK(grading_classify(e) == Grading::exactly_solvable);
        for (int k = 0; k <= 10; ++k) CHECK(es_spectrum(e, k) == family_eigenvalue(f, k));
    }
    CHECK(family_eigenvalue(FamilySpec::hermite(1), 3) == 14);
    CHECK(family_eigenvalue(FamilySpec::legendre(), 4) == -20);
    CHECK(family_eigenvalue(FamilySpec::jacobi_sym(1, 2), 2) == -12);
    CHECK_THROWS_AS(FamilySpec::hermite(2), DomainError);
    CHECK_THROWS_AS(FamilySpec::mathieu(4, 1), DomainError);
    CHECK(parse_family("jacobi_asym") == Family::jacobi_asym);
    CHECK_THROWS_AS(parse_family("chebyshev"), DomainError);
}

TEST_CASE("operators in x") {
    const auto h = to_differential_operator(family_element(FamilySpec::hermite_x()));
    CHECK(h == DiffOperator<Q>({P{}, P{0, 2}, P{-1}}));
    const auto l = to_differential_operator(family_element(FamilySpec::laguerre(Q(1, 2))));
    CHECK(l == DiffOperator<Q>({P{}, P{Q(-3, 2), 1}, P{0, -1}}));
    const auto g = to_differential_operator(family_element(FamilySpec::legendre_gauged(1)));
    CHECK(g == DiffOperator<Q>({P{}, P{6, -10}, P{0, 4, -4}}));
    const auto m = to_differential_operator(family_element(FamilySpec::mathieu(3, 1)));
    CHECK(m == DiffOperator<Q>({P{Q(-1, 4)}, P{1, -2}, P{1, 0, -1}}));
}

TEST_CASE("generated polynomials") {
    CHECK(generate_polynomial(FamilySpec::hermite(0), 1) == P{Q(-1, 2), 1});
    CHECK(generate_polynomial(FamilySpec::hermite_x(), 2) == P{Q(-1, 2), 0, 1});
    const Q a(7, 3);
    CHECK(generate_polynomial(FamilySpec::laguerre(a), 1) == P{-(a + 1), 1});
    for (const auto& f : families()) {
        CHECK(generate_polynomial(f, 0) == P{1});
        const auto op = to_differential_operator(family_element(f));
        for (int k = 0; k <= 6; ++k) {
            const P poly = generate_polynomial(f, k);
            CHECK(poly.degree() == k);
            CHECK(poly.leading() == 1);
            CHECK(op.apply(poly) == poly * family_eigenvalue(f, k));
        }
    }
    // textbook P_2 = (3x^2 - 1)/2, monic x^2 - 1/3
    CHECK(generate_polynomial(FamilySpec::legendre(), 2) == P{Q(-1, 3), 0, 1});
    CHECK_THROWS_AS(generate_polynomial(FamilySpec::legendre(), -1), DomainError);
}

TEST_CASE("parity reductions") {
    CHECK(hermite_laguerre_identity(1, 0));
    CHECK(hermite_laguerre_identity(0, 1));
    CHECK(hermite_laguerre_identity(2, 1));
    for (int n = 0; n <= 5; ++n)
        for (int p = 0; p <= 1; ++p) CHECK(hermite_laguerre_identity(n, p));
    for (int n = 0; n <= 4; ++n)
        for (int p = 0; p <= 1; ++p) CHECK(legendre_jacobi_identity(n, p));
}

TEST_CASE("Mathieu algebraic forms") {
    const Q al(3, 2);
    CHECK(mathieu_eigenvalue(0, al, 3) == -9 * al * al);
    CHECK(mathieu_eigenvalue(1, al, 0) == -al * al);
    CHECK(mathieu_eigenvalue(2, al, 0) == -al * al / 4);
    for (int v = 0; v < 4; ++v) {
        const auto e = mathieu_algebraic(v, al);
        for (int k = 0; k < 8; ++k) CHECK(es_spectrum(e, k) == mathieu_eigenvalue(v, al, k));
    }
    const auto m1 = to_differential_operator(mathieu_algebraic(1, 1));
    CHECK(m1 == DiffOperator<Q>({P{-1}, P{0, -3}, P{1, 0, -1}}));
}

TEST_CASE("factorized forms") {
    CHECK(factorization_check(FamilySpec::laguerre(Q(2, 3))));
    CHECK(factorization_check(FamilySpec::laguerre(-4)));
    CHECK(factorization_check(FamilySpec::hermite(0)));
    CHECK(factorization_check(FamilySpec::hermite(1)));
    CHECK(factorization_check(FamilySpec::legendre_gauged(0)));
    CHECK(factorization_check(FamilySpec::legendre_gauged(1)));
    CHECK_FALSE(factorization_check(FamilySpec::hermite_x()));
    CHECK_THROWS_AS(factorization_check(FamilySpec::legendre()), DomainError);
}
