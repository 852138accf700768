/// @file test_perturbation.cpp
/// @brief Dalgarno-Lewis recursion: closed forms, sextic cancellation, Case I partial sums.
#include <cmath>

#include "doctest.h"
#include "qes/catalogue.hpp"
#include "qes/perturbation.hpp"
#include "qes/spectral.hpp"

using namespace qes;
using Q = Rational;
using P = Polynomial<Q>;

namespace {

/// -(c00 x^2 + c0m x) d^2 + (ct0 x + cm) d
Sl2Element<Q> generic_es(const Q& c00, const Q& c0m, const Q& ct0, const Q& cm) {
    DiffOperator<Q> op({P{}, P{cm, ct0}, P{0, -c0m, -c00}});
    return element_from_operator(op, Q(0));
}

}  // namespace

TEST_CASE("first and second corrections in closed form") {
    Q c00 = 3, c0m = 5, ct0 = 7, cm = 11;
    auto e = generic_es(c00, c0m, ct0, cm);
    auto s = dalgarno_lewis(e, std::vector<P>{P{0, 1}}, 0, 2);
    CHECK(s.eps[0] == 0);
    CHECK(s.eps[1] == -cm / ct0);
    CHECK(s.phi[1] == P{0, -1 / ct0});
    CHECK(s.eps[2] == (cm / (ct0 * ct0 * ct0)) * (c0m * ct0 - c00 * cm) / (ct0 - c00));
    CHECK(s.eps[2] == Q(11, 686));
    std::vector<DiffOperator<Q>> ops{DiffOperator<Q>::multiplication(P{0, 1})};
    for (const auto& r : series_residuals(e, ops, dalgarno_lewis(e, std::vector<P>{P{0, 1}}, 0, 6)))
        CHECK(r.is_zero());
}

TEST_CASE("zero perturbation") {
    auto e = generic_es(1, 2, 3, 4);
    auto s = dalgarno_lewis(e, std::vector<P>{P{}}, 1, 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(s.eps[k] == 0);
        CHECK(s.phi[k].is_zero());
    }
}

TEST_CASE("sextic ground state has no corrections") {
    CHECK(sextic_vanishing_check(Q(1), 6));
    CHECK(sextic_vanishing_check(Q(3, 2), 4));
    auto s = dalgarno_lewis(sextic_unperturbed(Q(1)), std::vector<P>{P{0, 0, 1}}, 0, 2);
    CHECK(s.eps[1] != 0);
    CHECK_THROWS_AS(sextic_vanishing_check(Q(-1), 2), DomainError);
}

TEST_CASE("degeneracy and non-ES input are rejected") {
    // eps_k = k(k-1) - 2k... diag 0 at k = 0 and k = 3 for c00 = -1, ct0 = -2 -> k(k - 1) - 2k = k^2 - 3k
    auto e = generic_es(Q(-1), 1, Q(-2), 1);
    CHECK_THROWS_AS(dalgarno_lewis(e, std::vector<P>{P{0, 0, 0, 1}}, 0, 2), DegeneracyError);
    Sl2Element<Q> q;
    q.c_p = 1;
    CHECK_THROWS_AS(dalgarno_lewis(q, std::vector<P>{P{0, 1}}, 0, 1), DomainError);
}

TEST_CASE("Case I partial sums approach the block eigenvalue") {
    const int n = 2, order = 3;
    auto base = make_case(CaseId::I, {{"a", 0}, {"b", 3}, {"n", n}});
    auto e = case_element(base);
    // 2a x^2 d - 2 a n x with g = a
    std::vector<DiffOperator<Q>> w{DiffOperator<Q>({P{0, -2 * n}, P{0, 0, 2}})};
    for (int state = 0; state <= n; ++state) {
        auto s = dalgarno_lewis(e, w, state, order);
        for (const auto& r : series_residuals(e, w, s)) CHECK(r.is_zero());
        double errs[2];
        int idx = 0;
        for (double a : {1e-3, 5e-4}) {
            auto full = make_case(CaseId::I, {{"a", exact(a)}, {"b", 3}, {"n", n}});
            auto ev = eigen(to_double(band_matrix(full))).eigenvalues;
            double partial = 0, g = 1;
            for (int k = 0; k <= order; ++k, g *= a) partial += s.eps[k].get_d() * g;
            double best = 1e300;
            for (double v : ev) best = std::min(best, std::fabs(v - partial));
            errs[idx++] = best;
        }
        // O(a^{K+1}): halving a reduces the error by about 2^{K+1}
        CHECK(errs[0] < 1e-9);
        CHECK((errs[1] == 0 || errs[0] / errs[1] > 4));
    }
}
