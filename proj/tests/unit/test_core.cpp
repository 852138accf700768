/// @file test_core.cpp
/// @brief Polynomials, sl2 elements, block spectra.
#include <cmath>

#include "doctest.h"
#include "qes/spectral.hpp"

using namespace qes;
using Q = Rational;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-1.25e-1") == Q(-1, 8));
    CHECK(parse_rational("3/6") == Q(1, 2));
    CHECK(to_string(Q(6, 4)) == "3/2");
    CHECK(to_string(0.1) == "0.1");
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("generators satisfy the sl2 relations") {
    CHECK(verify_commutation(Q(3), 7));
    CHECK(verify_commutation(Q(5, 2), 6));
    CHECK(verify_commutation(4.0, 8));
}

TEST_CASE("generators preserve P_n") {
    for (int n = 0; n < 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (auto g : {Generator::plus, Generator::zero, Generator::minus})
                CHECK(apply_generator(g, Q(n), Polynomial<Q>::monomial(k)).degree() <= n);
}

TEST_CASE("element round trip and inversion reverses the block") {
    Sl2Element<Q> e;
    e.n = 3;
    e.c_pp = 1;
    e.c_p0 = Q(1, 2);
    e.c_pm = 2;
    e.c_0m = -1;
    e.c_mm = 3;
    e.c_p = 1;
    e.c_0 = Q(-3, 2);
    e.c_m = 5;
    e.c_const = 7;
    auto op = to_differential_operator(e);
    CHECK(element_from_operator(op, Q(3)) == e);
    auto m = matrix_in_monomial_basis(e, 4);
    auto mi = matrix_in_monomial_basis(conjugate_by_inversion(e), 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(mi(i, j) == m(3 - i, 3 - j));
    CHECK(op.apply(Polynomial<Q>::monomial(4)).degree() > 3);
}

TEST_CASE("casimir acts as a constant on P_n") {
    for (int n = 0; n < 5; ++n) {
        auto c = casimir_operator(Q(n));
        for (int k = 0; k <= n; ++k) {
            auto img = c.apply(Polynomial<Q>::monomial(k));
            CHECK(img == Polynomial<Q>::monomial(k, casimir_value(Q(n))));
        }
    }
}

TEST_CASE("char poly of a tridiagonal and of a full block") {
    BandMatrix<Q> m(3);
    m.set(0, 1, -2);
    m.set(1, 0, -8);
    m.set(1, 2, -12);
    m.set(2, 1, -4);
    auto cp = char_poly(m);
    CHECK(cp == Polynomial<Q>{0, -64, 0, 1});
    CHECK(ers_check(m));
    auto ps = ers_paired_spectrum(m);
    CHECK(ps.p == 1);
    CHECK(ps.reduced == Polynomial<Q>{-64, 1});

    BandMatrix<Q> f(3);
    int v = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f.set(i, j, Q(v++ * (i == j ? 2 : 1)));
    // det(eps I - F) via the characteristic polynomial at eps = 0 equals -det F
    Q det = f(0, 0) * (f(1, 1) * f(2, 2) - f(1, 2) * f(2, 1)) - f(0, 1) * (f(1, 0) * f(2, 2) - f(1, 2) * f(2, 0)) +
            f(0, 2) * (f(1, 0) * f(2, 1) - f(1, 1) * f(2, 0));
    CHECK(char_poly(f).coeff(0) == -det);
    CHECK(char_poly(f).coeff(2) == -f.trace());
}

TEST_CASE("eigen returns monic eigenvectors and raises on complex spectra") {
    BandMatrix<Q> m(2);
    m.set(0, 1, -2);
    m.set(1, 0, -4);
    auto r = eigen(m);
    REQUIRE(r.eigenvalues.size() == 2);
    CHECK(r.eigenvalues[0] == doctest::Approx(-std::sqrt(8.0)));
    CHECK(r.eigenvalues[1] == doctest::Approx(std::sqrt(8.0)));
    for (std::size_t i = 0; i < r.eigenvectors.size(); ++i) {
        const auto& p = r.eigenvectors[i];
        const double lam = r.eigenvector_values[i];
        CHECK(p.leading() == doctest::Approx(1.0));
        CHECK(-2 * p.coeff(1) == doctest::Approx(lam * p.coeff(0)));
        CHECK(-4 * p.coeff(0) == doctest::Approx(lam * p.coeff(1)));
    }
    BandMatrix<Q> c(2);
    c.set(0, 1, 1);
    c.set(1, 0, -1);
    CHECK_THROWS_AS(eigen(to_double(c)), RealityError);
    auto cz = eigenvalues_complex(to_double(c));
    REQUIRE(cz.size() == 2);
    CHECK(std::fabs(cz[0].second) == doctest::Approx(1.0));
}

TEST_CASE("defective block keeps algebraic multiplicity") {
    BandMatrix<Q> j(2);
    j.set(0, 1, 1);
    auto r = eigen(j);
    CHECK(r.eigenvalues.size() == 2);
    CHECK(r.eigenvectors.size() == 1);
}

TEST_CASE("rational eigenpairs are exact") {
    BandMatrix<Q> m(2);
    m.set(0, 1, Q(-9, 4));
    m.set(1, 0, -9);
    auto pairs = rational_eigenpairs(m);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].value == Q(-9, 2));
    CHECK(pairs[1].value == Q(9, 2));
    CHECK(pairs[1].vector == Polynomial<Q>{Q(-1, 2), 1});
}

TEST_CASE("es spectrum") {
    Sl2Element<Q> e;
    e.n = 4;
    e.c_pm = -2;
    e.c_0 = 3;
    e.c_m = 1;
    for (int k = 0; k <= 4; ++k) {
        auto m = matrix_in_monomial_basis(e, 5);
        CHECK(es_spectrum(e, k) == m(k, k));
    }
    e.c_p = 1;
    CHECK_THROWS_AS(es_spectrum(e, 1), DomainError);
}
