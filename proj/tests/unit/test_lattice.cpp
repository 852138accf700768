/// @file test_lattice.cpp
/// @brief Fock space, realizations, Hahn stencils, q-generators.
#include <cmath>
#include <random>

#include "doctest.h"
#include "qes/catalogue.hpp"
#include "qes/lattice.hpp"
#include "qes/spectral.hpp"

using namespace qes;
using Q = Rational;
using P = Polynomial<Rational>;

namespace {

std::vector<Realization> realizations() {
    return {Realization::continuum(), Realization::uniform(1), Realization::uniform(Q(-2, 3)),
            Realization::exponential(2), Realization::exponential(Q(1, 3))};
}

}  // namespace

TEST_CASE("normal ordering identities") {
    CHECK(normal_order("a b") == normal_order("b a + 1"));
    CHECK(normal_order("(a b a)^2") == normal_order("a^2 b^2 a^2"));
    CHECK(normal_order("(a b a)^3") == normal_order("a^3 b^3 a^3"));
    CHECK(commutator(normal_order("a^2 b^2"), normal_order("a^3 b^3")).is_zero());
    CHECK(commutator(HWExpression::letter_a(), HWExpression::letter_b()) == HWExpression::constant(1));
    CHECK(normal_order("a^3 b^2").str() == "b^2 a^3 + 6 b a^2 + 6 a");
    CHECK(normal_order("1/2 b - 3/2 * a b").coeff(0, 0) == Q(-3, 2));
    CHECK_THROWS_AS(normal_order("a + c"), DomainError);
    CHECK_THROWS_AS(normal_order("(a b"), DomainError);
}

TEST_CASE("fock action") {
    const auto ba = normal_order("b a");
    for (int k = 0; k < 6; ++k) CHECK(fock_apply(ba, P::monomial(k)) == P::monomial(k, k));
    CHECK(fock_apply(ba, P::constant(1)).is_zero());

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(-3, 3), power(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        HWExpression l;
        for (int t = 0; t < 4; ++t) l += HWExpression::term(power(rng), power(rng), small(rng));
        std::vector<Q> c;
        for (int i = 0; i < 5; ++i) c.push_back(small(rng));
        P phi(c);
        CHECK(fock_apply(l, phi) == to_differential_operator(l).apply(phi));
    }
}

TEST_CASE("sl2 triple in the Heisenberg-Weyl letters") {
    CHECK(sl2_from_hw(0).zero == normal_order("b a"));
    const auto [jp, j0, jm] = sl2_from_hw(2);
    CHECK((commutator(jp, jm) + j0 * Q(2)).is_zero());
    CHECK(commutator(j0, jp) == jp);
    CHECK(commutator(j0, jm) == jm * Q(-1));
    CHECK(hw_casimir(1) == HWExpression::constant(Q(-3, 4)));
    CHECK(hw_casimir(Q(5, 2)) == HWExpression::constant(casimir_value(Q(5, 2))));
}

TEST_CASE("Case VI in the Fock space matches the monomial block") {
    const auto spec = make_case(CaseId::VI);
    const auto e = case_element(spec);
    const auto l = element_to_hw(e);
    CHECK(to_differential_operator(l) == to_differential_operator(e));
    const int size = static_cast<int>(e.n.get_d()) + 1;
    CHECK(realize(l, Realization::continuum(), size) == matrix_in_monomial_basis(e, size));
    for (int k = 0; k < size; ++k)
        CHECK(fock_apply(l, P::monomial(k)) == to_differential_operator(e).apply(P::monomial(k)));
}

TEST_CASE("q-numbers and quasi-monomial bases") {
    CHECK(qnumber(3, 0.5) == doctest::Approx(1.75));
    CHECK(qnumber(3, Q(2)) == Q(7));
    CHECK(qnumber(0, 0.3) == 0.0);
    CHECK(qnumber(5, 1.0) == 5.0);
    CHECK(qnumber(5, 1.0 + 1e-9) == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(evaluate({0, 0, 1}, Realization::uniform(1), 3.0) == doctest::Approx(6.0));
    const Q q(3, 2);
    CHECK(basis_polynomial(3, Realization::exponential(q)).leading() == Q(6) / (Q(1) * (1 + q) * (1 + q + q * q)));
    std::vector<Q> c{1, -2, Q(1, 3), 4};
    for (const auto& r : realizations()) {
        CHECK(basis_transport(c, r, Realization::continuum()) == c);
        CHECK(from_polynomial(to_polynomial(c, r), r) == c);
    }
    CHECK_THROWS_AS(Realization::exponential(1), DomainError);
    CHECK_THROWS_AS(basis_polynomial(2, Realization::uniform(0)), DomainError);
}

TEST_CASE("concrete operators satisfy [a, b] = 1 and shift the basis") {
    for (const auto& r : realizations())
        for (int k = 0; k < 6; ++k) {
            const P e = basis_polynomial(k, r);
            CHECK(apply_a(apply_b(e, r), r) - apply_b(apply_a(e, r), r) == e);
            CHECK(apply_b(e, r) == basis_polynomial(k + 1, r));
            CHECK(apply_a(e, r) == (k ? basis_polynomial(k - 1, r) * Q(k) : P()));
        }
}

TEST_CASE("realization independence of the matrix") {
    const auto ba = normal_order("b a");
    for (const auto& r : realizations()) {
        auto m = realize(ba, r, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(m(i, j) == (i == j ? Q(i) : Q(0)));
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-4, 4), power(0, 3);
    for (int trial = 0; trial < 6; ++trial) {
        HWExpression l;
        for (int t = 0; t < 5; ++t) l += HWExpression::term(power(rng), power(rng), Q(small(rng), 1 + power(rng)));
        for (int n = 1; n <= 12; ++n) {
            const auto ref = realize(l, Realization::continuum(), n);
            for (const auto& r : realizations()) CHECK(realize(l, r, n) == ref);
        }
    }
    const auto c1 = element_to_hw(case_element(make_case(CaseId::I)));
    CHECK(realize(c1, Realization::uniform(1), 2) == band_matrix(make_case(CaseId::I)));
    const auto c6 = make_case(CaseId::VI, {{"n", 2}});
    const auto m6 = realize(element_to_hw(case_element(c6)), Realization::exponential(2), 3);
    CHECK(m6 == band_matrix(c6));
    const auto ev = eigen(m6).eigenvalues;
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(-8.0));
    CHECK(ev[1] == doctest::Approx(0.0).scale(1.0));
    CHECK(ev[2] == doctest::Approx(8.0));
    const auto c61 = make_case(CaseId::VI);
    const auto ev1 = eigen(realize(element_to_hw(case_element(c61)), Realization::exponential(2), 2)).eigenvalues;
    REQUIRE(ev1.size() == 2);
    CHECK(ev1[0] == doctest::Approx(-std::sqrt(8.0)));
    CHECK(ev1[1] == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("Hahn operator: spectrum and stencil consistency") {
    const std::vector<HahnParameters> sets{
        {Q(-1), Q(3, 2), Q(-5, 2), Q(2), Q(1)},
        {Q(2), Q(-1, 3), Q(1), Q(3, 4), Q(1, 2)},
        HahnParameters::hahn(5, Q(1, 2), Q(3, 2)),
    };
    for (const auto& h : sets) {
        const auto l = hahn_hw(h);
        const auto st = hahn_operator(h);
        const auto m = realize(l, Realization::continuum(), 11);
        CHECK(m.lower_bandwidth() == 0);
        const auto r = Realization::uniform(h.delta);
        for (int k = 0; k <= 10; ++k) {
            CHECK(m(k, k) == hahn_eigenvalue(h, k));
            const auto c = triangular_eigenvector(m, k);
            const P f = to_polynomial(c, r);
            CHECK(st.apply(f) == f * hahn_eigenvalue(h, k));
            const auto fd = to_double(f);
            const double lam = hahn_eigenvalue(h, k).get_d();
            for (int i = 0; i < 20; ++i) {
                const double x = -3.0 + 0.37 * i;
                const double lhs = st.apply([&](double t) { return fd.eval(t); }, x);
                CHECK(lhs == doctest::Approx(lam * fd.eval(x)).epsilon(1e-10).scale(1.0));
            }
        }
        // the stencil equals the HW form in the uniform realization
        for (int k = 0; k < 6; ++k) {
            const P e = basis_polynomial(k, r);
            CHECK(st.apply(e) == apply(l, e, r));
        }
    }
}

TEST_CASE("Hahn degenerations") {
    const auto ch = HahnParameters::charlier(Q(3, 2));
    const auto mc = realize(hahn_hw(ch), Realization::continuum(), 8);
    for (int k = 0; k < 8; ++k) CHECK(mc(k, k) == -k);
    CHECK(hahn_operator(ch).a == P{Q(3, 2)});

    const auto mx = HahnParameters::meixner(Q(1, 3), 2);
    const auto mm = realize(hahn_hw(mx), Realization::continuum(), 8);
    for (int k = 0; k < 8; ++k) CHECK(mm(k, k) == Q(-2, 3) * k);

    for (int n_points : {2, 3, 5}) {
        const auto h = HahnParameters::hahn(n_points, Q(1, 2), Q(3, 2));
        const auto m = realize(hahn_hw(h), Realization::continuum(), n_points + 3);
        const auto c = triangular_eigenvector(m, n_points);
        for (int i = 0; i < n_points; ++i) CHECK(is_zero(c[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("quasi-exactly-solvable Hahn operator") {
    const HahnParameters h{Q(2), Q(-1, 3), Q(1), Q(3, 4), Q(1, 2)};
    for (int n = 0; n < 5; ++n) {
        auto m0 = hahn_qes_operator(0, h, n);
        CHECK(m0 == realize(hahn_hw(h), Realization::continuum(), n + 1));
    }
    const Q ap(5, 7);
    for (int n = 1; n < 6; ++n) {
        const auto m = hahn_qes_operator(ap, h, n);
        CHECK(m.size() == n + 1);
        CHECK(m.lower_bandwidth() == 1);
        // printed differential form
        const Q& d = h.delta;
        DiffOperator<Q> t({P{0, -d * ap * n},
                           P{h.a4, h.a1 + d * ap + h.a3, d * ap},
                           P{0, d * h.a1 + h.a2, h.a1 + d * ap},
                           P{0, 0, d * h.a1}});
        CHECK(to_differential_operator(hahn_qes_hw(ap, h, n)) == t);
        CHECK(matrix_in_monomial_basis(t, n + 1) == m);
        for (const auto& r : realizations()) CHECK(realize(hahn_qes_hw(ap, h, n), r, n + 1) == m);
    }
    const auto m1 = hahn_qes_operator(ap, h, 1);
    auto cp = char_poly(m1);
    CHECK(cp.degree() == 2);
    CHECK(cp.coeff(1) == -(m1(0, 0) + m1(1, 1)));
    CHECK(cp.coeff(0) == m1(0, 0) * m1(1, 1) - m1(0, 1) * m1(1, 0));
}

TEST_CASE("q-deformed generators") {
    for (int n = 0; n < 5; ++n) {
        const auto top = Polynomial<double>::monomial(n);
        CHECK(apply_q_generator(Generator::plus, n, 0.5, top).is_zero());
        for (int k = 0; k <= n; ++k)
            for (auto g : {Generator::plus, Generator::zero, Generator::minus})
                CHECK(apply_q_generator(g, n, 0.5, Polynomial<double>::monomial(k)).degree() <= n);
    }
    for (int n = 0; n < 4; ++n) {
        CHECK(q_relation_defect(n, 0.5, 7) < 1e-12);
        CHECK(q_relation_defect(n, 3.0, 7) < 1e-9);
    }
    for (int k = 0; k < 5; ++k)
        for (auto g : {Generator::plus, Generator::zero, Generator::minus}) {
            const auto x = Polynomial<double>::monomial(k);
            const auto lim = apply_q_generator(g, 3, 1.0 + 1e-7, x);
            const auto ref = apply_generator(g, 3.0, x);
            for (int i = 0; i <= 6; ++i) CHECK(lim.coeff(i) == doctest::Approx(ref.coeff(i)).epsilon(1e-5));
        }
}

TEST_CASE("lattice sample export") {
    const auto csv = lattice_samples_csv({0, 0, 1}, Realization::uniform(1), 0.0, 1.0, 4);
    CHECK(csv == "x,f\n0,0\n1,0\n2,2\n3,6\n");
}
