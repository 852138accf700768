/// @file classical.hpp
/// @brief Exactly-solvable Borel elements for the classical polynomial families and the algebraic Mathieu forms.
#pragma once
#include <string>

#include "qes/sl2.hpp"

namespace qes {

/// hermite acts in y = x^2 with parity p; hermite_x is -d^2 + 2x d in x. legendre is the x-form; legendre_gauged
/// acts in y = x^2. jacobi_asym lives on [0, 1].
enum class Family { hermite, hermite_x, laguerre, legendre, legendre_gauged, jacobi_sym, jacobi_asym, mathieu };

struct FamilySpec {
    Family family = Family::hermite;
    int p = 0;
    Rational a = 0, b = 0;
    int variant = 0;      ///< Mathieu gauge variant 0..3
    Rational alpha = 1;   ///< Mathieu frequency

    static FamilySpec hermite(int p);
    static FamilySpec hermite_x();
    static FamilySpec laguerre(const Rational& a);
    static FamilySpec legendre();
    static FamilySpec legendre_gauged(int p);
    static FamilySpec jacobi_sym(const Rational& a, const Rational& b);
    static FamilySpec jacobi_asym(const Rational& a, const Rational& b);
    static FamilySpec mathieu(int variant, const Rational& alpha);
};

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// Mark-zero element; throws DomainError for p outside {0, 1} or variant outside 0..3.
Sl2Element<Rational> family_element(const FamilySpec& spec);

/// Closed-form eigenvalue of the degree-k polynomial eigenfunction in the element's own variable.
Rational family_eigenvalue(const FamilySpec& spec, int k);

/// Monic eigenpolynomial of the given degree in the element's own variable.
Polynomial<Rational> generate_polynomial(const FamilySpec& spec, int degree);

/// H_{2n+p}(x) and x^p L_n^(-1/2+p)(x^2) agree after monic normalization.
bool hermite_laguerre_identity(int n, int p);

/// P_{2n+p}(x) and x^p P_n^(-1/2+p, 0)(x^2) agree after monic normalization, the right side from the [0, 1] form.
bool legendre_jacobi_identity(int n, int p);

/// Element and eigenvalue of one of the four gauge variants of the algebraic Mathieu Laplacian.
Sl2Element<Rational> mathieu_algebraic(int variant, const Rational& alpha);
Rational mathieu_eigenvalue(int variant, const Rational& alpha, int k);

/// Checks the shifted element against its product of linear factors on x^k, k <= 8:
/// laguerre: E + (a+1) = -(J0 + a + 1)(J- - 1); hermite: E + 2(1+p) = -2(2J0 + 1 + 2p)(J- - 1);
/// legendre_gauged: E = -2(2J0 + 1 + 2p)(J0 - J-). hermite_x has no such form and returns false.
bool factorization_check(const FamilySpec& spec);

}  // namespace qes
