/// @file spectral.hpp
/// @brief Characteristic polynomials, eigen-decomposition and energy-reflection tools for small blocks.
#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "qes/band_matrix.hpp"
#include "qes/sl2.hpp"

namespace qes {

struct SpectrumResult {
    std::vector<double> eigenvalues;                ///< ascending, with multiplicity
    std::vector<Polynomial<double>> eigenvectors;   ///< one per independent eigenvector, monic
    std::vector<double> eigenvector_values;         ///< eigenvalue belonging to each eigenvector
    std::optional<Polynomial<Rational>> char_poly;  ///< exact mode only
    bool ers_symmetric = false;
    bool balanced = false;  ///< symmetrized tridiagonal path was used
};

/// Monic det(eps I - M).
Polynomial<Rational> char_poly(const BandMatrix<Rational>& m);

/// Products t(k+1,k) t(k,k+1) for a tridiagonal block; all positive means real simple spectrum.
std::vector<double> positivity_products(const BandMatrix<double>& m);

/// Throws RealityError when the block has complex eigenvalues.
SpectrumResult eigen(const BandMatrix<double>& m);
SpectrumResult eigen(const BandMatrix<Rational>& m);

/// Real eigenvalues of any real block, complex pairs allowed (returned as (re, im)).
std::vector<std::pair<double, double>> eigenvalues_complex(const BandMatrix<double>& m);

/// Rational eigenvalues of the block together with an exact eigenvector basis for each.
struct RationalEigenpair {
    Rational value;
    Polynomial<Rational> vector;
};
std::vector<RationalEigenpair> rational_eigenpairs(const BandMatrix<Rational>& m);

/// Exact basis of the null space of m (columns as coefficient polynomials).
std::vector<Polynomial<Rational>> null_space(const BandMatrix<Rational>& m);

/// Zero diagonal and tr(M) = tr(M^3) = tr(M^5) = 0 exactly.
bool ers_check(const BandMatrix<Rational>& m);

/// char_poly = eps^p s(eps^2).
struct PairedSpectrum {
    int p = 0;
    Polynomial<Rational> reduced;  ///< s(u)
    std::vector<double> squares;   ///< real roots u of s, ascending
};
PairedSpectrum ers_paired_spectrum(const BandMatrix<Rational>& m);

/// Real roots of a polynomial with exact coefficients (companion-matrix eigenvalues, polished).
std::vector<double> real_roots(const Polynomial<Rational>& p, double imag_tol = 1e-7);

/// Eigenvalue of the degree-k polynomial eigenfunction of an exactly-solvable element.
template <class T>
T es_spectrum(const Sl2Element<T>& e, int k) {
    if (grading_classify(e) != Grading::exactly_solvable)
        throw DomainError("es_spectrum requires an exactly-solvable element");
    return to_differential_operator(e).apply(Polynomial<T>::monomial(k)).coeff(k);
}

/// Rationalizes a double with a bounded denominator (continued fractions).
Rational rationalize(double v, long max_den = 1000000);

}  // namespace qes
