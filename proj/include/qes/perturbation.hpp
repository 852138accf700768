/// @file perturbation.hpp
/// @brief Algebraic Dalgarno-Lewis perturbation theory in the polynomial space.
#pragma once
#include <vector>

#include "qes/sl2.hpp"

namespace qes {

struct PerturbationSeries {
    std::vector<Rational> eps;                ///< eps_0 .. eps_K
    std::vector<Polynomial<Rational>> phi;    ///< phi_0 .. phi_K; phi_k (k >= 1) has no x^state component
};

/// Corrections for (E2 + sum_j g^j W_j) phi = eps phi with E2 exactly solvable. W_j are operators.
PerturbationSeries dalgarno_lewis(const Sl2Element<Rational>& e, const std::vector<DiffOperator<Rational>>& perturbations,
                                  int state, int order);
/// Multiplicative perturbations g Vp_1 + g^2 Vp_2 + ...
PerturbationSeries dalgarno_lewis(const Sl2Element<Rational>& e, const std::vector<Polynomial<Rational>>& vp, int state,
                                  int order);

/// (E2 - eps_0) phi_k - sum_{i=1..k} eps_i phi_{k-i} + sum_j W_j phi_{k-j} for k = 1..K; all zero for a valid series.
std::vector<Polynomial<Rational>> series_residuals(const Sl2Element<Rational>& e,
                                                   const std::vector<DiffOperator<Rational>>& perturbations,
                                                   const PerturbationSeries& s);

/// Gauge-rotated oscillator -4y d^2 + (4by - 2) d with perturbations 2by^2 - 3y and y^3 (y = x^2).
Sl2Element<Rational> sextic_unperturbed(const Rational& b);
std::vector<Polynomial<Rational>> sextic_perturbations(const Rational& b);

/// True iff eps_1 .. eps_order vanish exactly for the ground state.
bool sextic_vanishing_check(const Rational& b, int order);

}  // namespace qes
