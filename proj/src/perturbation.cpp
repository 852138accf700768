/// @file perturbation.cpp
/// @brief Triangular solves for the Dalgarno-Lewis recursion.
#include "qes/perturbation.hpp"

#include <algorithm>

namespace qes {

namespace {

using R = Rational;
using P = Polynomial<Rational>;

/// Solves (E2 - eps0) phi = rhs + eps_k x^state-part; returns eps_k through `eps_out` when `fix_eps`.
/// `phi0` is the monic unperturbed polynomial; its coefficients multiply the unknown eps_k.
P triangular_solve(const DiffOperator<R>& e2, const R& eps0, int state, const P& known, const P& phi0, bool fix_eps,
                   R& eps_out) {
    const int top = std::max(known.degree(), state);
    std::vector<R> c(static_cast<std::size_t>(top) + 1, R(0));
    // column images of x^l, built lazily
    std::vector<P> images(static_cast<std::size_t>(top) + 1);
    for (int l = 0; l <= top; ++l) images[static_cast<std::size_t>(l)] = e2.apply(P::monomial(l));
    R eps = 0;
    for (int m = top; m >= 0; --m) {
        R acc = known.coeff(m) + eps * phi0.coeff(m);
        for (int l = m + 1; l <= top; ++l) acc -= images[static_cast<std::size_t>(l)].coeff(m) * c[static_cast<std::size_t>(l)];
        const R diag = images[static_cast<std::size_t>(m)].coeff(m) - eps0;
        if (m == state) {
            if (fix_eps) {
                eps = -acc;  // eps * 1 + acc = 0
            } else if (!is_zero(acc)) {
                throw InconsistencyError("perturbation order is not solvable in the polynomial space");
            }
            c[static_cast<std::size_t>(m)] = 0;
            continue;
        }
        if (is_zero(diag)) throw DegeneracyError("unperturbed level is degenerate with x^" + std::to_string(m));
        c[static_cast<std::size_t>(m)] = acc / diag;
    }
    eps_out = eps;
    return P(std::move(c));
}

}  // namespace

PerturbationSeries dalgarno_lewis(const Sl2Element<R>& e, const std::vector<DiffOperator<R>>& perturbations, int state,
                                  int order) {
    if (grading_classify(e) != Grading::exactly_solvable)
        throw DomainError("unperturbed element must be exactly solvable");
    if (state < 0 || order < 0) throw DomainError("state and order must be >= 0");
    const auto e2 = to_differential_operator(e);
    const R eps0 = e2.apply(P::monomial(state)).coeff(state);
    // phi0: monic eigenpolynomial of degree `state`
    std::vector<R> c0(static_cast<std::size_t>(state) + 1, R(0));
    c0[static_cast<std::size_t>(state)] = 1;
    for (int m = state - 1; m >= 0; --m) {
        R acc = 0;
        for (int l = m + 1; l <= state; ++l) acc -= e2.apply(P::monomial(l)).coeff(m) * c0[static_cast<std::size_t>(l)];
        const R diag = e2.apply(P::monomial(m)).coeff(m) - eps0;
        if (is_zero(diag)) throw DegeneracyError("unperturbed level is degenerate with x^" + std::to_string(m));
        c0[static_cast<std::size_t>(m)] = acc / diag;
    }
    PerturbationSeries s;
    s.eps.push_back(eps0);
    s.phi.push_back(P(std::move(c0)));
    for (int k = 1; k <= order; ++k) {
        P known;
        for (int i = 1; i < k; ++i) known += s.phi[static_cast<std::size_t>(k - i)] * s.eps[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < perturbations.size(); ++j) {
            const int idx = k - static_cast<int>(j) - 1;
            if (idx >= 0) known -= perturbations[j].apply(s.phi[static_cast<std::size_t>(idx)]);
        }
        R eps_k;
        P phi_k = triangular_solve(e2, eps0, state, known, s.phi[0], true, eps_k);
        s.eps.push_back(eps_k);
        s.phi.push_back(std::move(phi_k));
    }
    return s;
}

PerturbationSeries dalgarno_lewis(const Sl2Element<R>& e, const std::vector<P>& vp, int state, int order) {
    std::vector<DiffOperator<R>> ops;
    for (const auto& p : vp) ops.push_back(DiffOperator<R>::multiplication(p));
    return dalgarno_lewis(e, ops, state, order);
}

std::vector<P> series_residuals(const Sl2Element<R>& e, const std::vector<DiffOperator<R>>& perturbations,
                                const PerturbationSeries& s) {
    const auto e2 = to_differential_operator(e);
    std::vector<P> out;
    for (std::size_t k = 1; k < s.phi.size(); ++k) {
        P r = e2.apply(s.phi[k]) - s.phi[k] * s.eps[0];
        for (std::size_t i = 1; i <= k; ++i) r -= s.phi[k - i] * s.eps[i];
        for (std::size_t j = 0; j < perturbations.size() && j + 1 <= k; ++j) r += perturbations[j].apply(s.phi[k - j - 1]);
        out.push_back(r);
    }
    return out;
}

Sl2Element<R> sextic_unperturbed(const R& b) {
    DiffOperator<R> op({P{}, P{-2, 4 * b}, P{0, -4}});
    return element_from_operator(op, R(0));
}

std::vector<P> sextic_perturbations(const R& b) { return {P{0, -3, 2 * b}, P{0, 0, 0, 1}}; }

bool sextic_vanishing_check(const R& b, int order) {
    if (!(b > 0)) throw DomainError("sextic check requires b > 0");
    auto s = dalgarno_lewis(sextic_unperturbed(b), sextic_perturbations(b), 0, order);
    for (int i = 1; i <= order; ++i)
        if (!is_zero(s.eps[static_cast<std::size_t>(i)])) return false;
    return true;
}

}  // namespace qes
