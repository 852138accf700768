/// @file test_oracle.cpp
/// @brief Finite-difference eigensolver against analytic spectra and the algebraic sector.
#include <cmath>

#include "doctest.h"
#include "qes/oracle.hpp"

using namespace qes;
using Q = Rational;

namespace {

bool contains(const std::vector<double>& v, double x, double tol) {
    for (double e : v)
        if (std::fabs(e - x) < tol) return true;
    return false;
}

}  // namespace

TEST_CASE("harmonic oscillator") {
    RealFn v = [](double z) { return z * z; };
    auto r = solve(v, OracleDomain::line, 5, Grid::uniform(-12, 12, 4001));
    for (int k = 0; k < 5; ++k) {
        CHECK(r.eigenvalues[k] == doctest::Approx(2 * k + 1).epsilon(1e-6));
        CHECK(r.node_counts[k] == k);
    }
}

TEST_CASE("sextic potentials") {
    RealFn qes0 = [](double z) { return std::pow(z, 6) - 3 * z * z; };
    auto g = auto_grid(qes0, nullptr, OracleDomain::line, 0.0);
    auto r = solve(qes0, OracleDomain::line, 1, g);
    CHECK(std::fabs(r.eigenvalues[0]) < 1e-6);
    RealFn plus = [](double z) { return std::pow(z, 6) + 3 * z * z; };
    auto r2 = solve(plus, OracleDomain::line, 1, auto_grid(plus, nullptr, OracleDomain::line, 2.0));
    CHECK(std::fabs(r2.eigenvalues[0] - 1.93556) < 2e-3);
}

TEST_CASE("Coulomb Sturm problem") {
    const double k = 0.5;
    RealFn v = [k](double) { return k * k; };
    RealFn w = [](double r) { return 1.0 / r; };
    auto r = solve_weighted(v, w, OracleDomain::half_line, 3, Grid::uniform(0, 80, 8001));
    for (int m = 1; m <= 3; ++m) CHECK(std::fabs(r.eigenvalues[m - 1] - 2 * k * m) < 1e-5);
}

TEST_CASE("unit weight reproduces solve") {
    RealFn v = [](double z) { return z * z + 0.3 * z; };
    RealFn one = [](double) { return 1.0; };
    auto g = Grid::uniform(-12, 12, 2001);
    auto a = solve(v, OracleDomain::line, 4, g);
    auto b = solve_weighted(v, one, OracleDomain::line, 4, g);
    for (int i = 0; i < 4; ++i) CHECK(a.eigenvalues[i] == doctest::Approx(b.eigenvalues[i]).epsilon(1e-10));
}

TEST_CASE("Case II algebraic values in the generalized spectrum") {
    auto s = make_case(CaseId::II, {{"a", -1}, {"b", -2}});
    auto r = solve_case(s, 4);
    CHECK(contains(r.eigenvalues, -1 - std::sqrt(7.0), 1e-5));
    CHECK(contains(r.eigenvalues, -1 + std::sqrt(7.0), 1e-5));
}

TEST_CASE("Case VI node pattern") {
    for (int p : {0, 1}) {
        auto s = make_case(CaseId::VI, {{"n", 1}, {"p", p}, {"b", 1}});
        auto pairs = algebraic_eigenpairs(s);
        auto r = solve_case(s, 6);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            int level = -1;
            for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
                if (std::fabs(r.eigenvalues[k] - pairs[i].energy_full) < 1e-5) level = static_cast<int>(k);
            REQUIRE(level >= 0);
            CHECK(r.node_counts[static_cast<std::size_t>(level)] == static_cast<int>(2 * i) + p);
        }
    }
}

TEST_CASE("oracle agrees with the algebraic energies") {
    std::vector<CaseSpec> cases;
    for (int n = 0; n <= 3; ++n) {
        cases.push_back(make_case(CaseId::I, {{"n", n}}));
        cases.push_back(make_case(CaseId::IV, {{"n", n}}));
        cases.push_back(make_case(CaseId::IV, {{"n", n}, {"p", 1}}));
        cases.push_back(make_case(CaseId::VI, {{"n", n}}));
        cases.push_back(make_case(CaseId::VI, {{"n", n}, {"p", 1}, {"b", 2}}));
        cases.push_back(make_case(CaseId::VII, {{"n", n}}));
        cases.push_back(make_case(CaseId::VII, {{"n", n}, {"l", 1}, {"d", 2}}));
    }
    for (const auto& s : cases) {
        INFO("case " << to_string(s.id) << " n=" << s.mark());
        REQUIRE(normalizable(s));
        auto pairs = algebraic_eigenpairs(s);
        auto r = solve_case(s, 3 * block_size(s) + 2);
        for (const auto& p : pairs) {
            INFO("E = " << p.energy_full);
            CHECK(contains(r.eigenvalues, p.energy_full, 1e-5));
        }
    }
}

TEST_CASE("second-type cases: algebraic eigenvalues in the weighted spectrum") {
    std::vector<CaseSpec> cases{make_case(CaseId::III), make_case(CaseId::V),
                                make_case(CaseId::VIII), make_case(CaseId::IX),
                                make_case(CaseId::VIII, {{"n", 2}, {"l", 1}})};
    for (const auto& s : cases) {
        INFO("case " << to_string(s.id));
        REQUIRE(normalizable(s));
        auto r = solve_case(s, 3 * block_size(s) + 2);
        for (const auto& p : algebraic_eigenpairs(s)) CHECK(contains(r.eigenvalues, p.eps, 1e-5));
    }
}

TEST_CASE("grid halving ratio") {
    RealFn v = [](double z) { return z * z + 0.1 * z * z * z * z; };
    double ratio = convergence_ratio(v, OracleDomain::line, 1, Grid::uniform(-8, 8, 201));
    CHECK(ratio >= 8);
    CHECK(ratio <= 32);
}

TEST_CASE("oracle errors") {
    RealFn v = [](double z) { return z * z; };
    CHECK_THROWS_AS(solve(v, OracleDomain::line, 2, Grid::uniform(-1, 1, 1001)), AccuracyError);
    CHECK_THROWS_AS(solve(v, OracleDomain::line, 2, Grid::uniform(-1, 1, 50)), DomainError);
    CHECK_THROWS_AS(solve_case(make_case(CaseId::X), 2), DomainError);
    CHECK(count_nodes({1, 0.5, -0.2, 1e-12, -0.1, 0.3}) == 2);
}
