/// @file sl2.hpp
/// @brief sl(2,R) generators in the projectivized representation and quadratic elements.
#pragma once
#include "qes/band_matrix.hpp"
#include "qes/diff_operator.hpp"

namespace qes {

enum class Generator { plus, zero, minus };
enum class Grading { qes, exactly_solvable };

/// J+ = x^2 d - n x, J0 = x d - n/2, J- = d.
template <class T>
DiffOperator<T> generator_operator(Generator g, const T& n) {
    using P = Polynomial<T>;
    switch (g) {
        case Generator::plus:
            return DiffOperator<T>({P{T(0), T(0) - n}, P::monomial(2)});
        case Generator::zero:
            return DiffOperator<T>({P::constant(T(0) - n / T(2)), P::monomial(1)});
        case Generator::minus:
        default:
            return DiffOperator<T>::derivative(1);
    }
}

template <class T>
Polynomial<T> apply_generator(Generator g, const T& n, const Polynomial<T>& p) {
    return generator_operator(g, n).apply(p);
}

/// c_pp J+J+ + 2c_p0 J+J0 + 2c_pm J+J- + 2c_0m J0J- + c_mm J-J- + c_p J+ + 2c_0 J0 + c_m J- + c
template <class T>
struct Sl2Element {
    T n = T(0);
    T c_pp = T(0), c_p0 = T(0), c_pm = T(0), c_0m = T(0), c_mm = T(0);
    T c_p = T(0), c_0 = T(0), c_m = T(0);
    T c_const = T(0);

    /// Adds k J0J0 through J0J0 = J+J- + J0 - C2 with C2 = -(n/2)(n/2+1).
    Sl2Element& add_j0j0(const T& k) {
        c_pm += k / T(2);
        c_0 += k / T(2);
        c_const += k * (n / T(2)) * (n / T(2) + T(1));
        return *this;
    }
    friend bool operator==(const Sl2Element& a, const Sl2Element& b) {
        return a.n == b.n && a.c_pp == b.c_pp && a.c_p0 == b.c_p0 && a.c_pm == b.c_pm && a.c_0m == b.c_0m &&
               a.c_mm == b.c_mm && a.c_p == b.c_p && a.c_0 == b.c_0 && a.c_m == b.c_m && a.c_const == b.c_const;
    }
};

inline Sl2Element<double> to_double(const Sl2Element<Rational>& e) {
    return {e.n.get_d(),   e.c_pp.get_d(), e.c_p0.get_d(), e.c_pm.get_d(), e.c_0m.get_d(),
            e.c_mm.get_d(), e.c_p.get_d(),  e.c_0.get_d(),  e.c_m.get_d(),  e.c_const.get_d()};
}

/// -P4 = c_pp x^4 + 2c_p0 x^3 + 2c_pm x^2 + 2c_0m x + c_mm, P3, P2 with their full n-dependence.
template <class T>
DiffOperator<T> to_differential_operator(const Sl2Element<T>& e) {
    using P = Polynomial<T>;
    const T& n = e.n;
    P p4m{e.c_mm, T(2) * e.c_0m, T(2) * e.c_pm, T(2) * e.c_p0, e.c_pp};
    P p3{T(0) - n * e.c_0m + e.c_m, T(-2) * (n * e.c_pm - e.c_0), (T(2) - T(3) * n) * e.c_p0 + e.c_p,
         T(2) * (T(1) - n) * e.c_pp};
    P p2{T(0) - n * e.c_0 + e.c_const, n * n * e.c_p0 - n * e.c_p, (n * n - n) * e.c_pp};
    return DiffOperator<T>({p2, p3, p4m});
}

/// Inverse of to_differential_operator for a given mark n; throws if the operator is not a quadratic
/// element with that mark.
template <class T>
Sl2Element<T> element_from_operator(const DiffOperator<T>& op, const T& n) {
    if (op.order() > 2) throw DomainError("operator order exceeds 2");
    const auto p2 = op.coeff(0), p3 = op.coeff(1), p4m = op.coeff(2);
    if (p4m.degree() > 4 || p3.degree() > 3 || p2.degree() > 2)
        throw DomainError("coefficient degrees exceed the quadratic-element structure");
    Sl2Element<T> e;
    e.n = n;
    e.c_pp = p4m.coeff(4);
    e.c_p0 = p4m.coeff(3) / T(2);
    e.c_pm = p4m.coeff(2) / T(2);
    e.c_0m = p4m.coeff(1) / T(2);
    e.c_mm = p4m.coeff(0);
    e.c_p = p3.coeff(2) - (T(2) - T(3) * n) * e.c_p0;
    e.c_0 = p3.coeff(1) / T(2) + n * e.c_pm;
    e.c_m = p3.coeff(0) + n * e.c_0m;
    e.c_const = p2.coeff(0) + n * e.c_0;
    if (!(to_differential_operator(e) == op))
        throw DomainError("operator is not a quadratic sl2 element for the given mark");
    return e;
}

/// c_pp = c_p0 = c_p = 0 means no positive-grading terms.
template <class T>
Grading grading_classify(const Sl2Element<T>& e) {
    return (is_zero(e.c_pp) && is_zero(e.c_p0) && is_zero(e.c_p)) ? Grading::exactly_solvable : Grading::qes;
}

/// J+ -> -J-, J0 -> -J0, J- -> -J+ applied word by word, then rewritten in the canonical ordering.
template <class T>
Sl2Element<T> conjugate_by_inversion(const Sl2Element<T>& e) {
    Sl2Element<T> r;
    r.n = e.n;
    // J+J+ <-> J-J-
    r.c_mm = e.c_pp;
    r.c_pp = e.c_mm;
    // J+J0 -> J-J0 = J0J- + J-
    r.c_0m += e.c_p0;
    r.c_m += T(2) * e.c_p0;
    // J+J- -> J-J+ = J+J- + 2J0
    r.c_pm += e.c_pm;
    r.c_0 += T(2) * e.c_pm;
    // J0J- -> J0J+ = J+J0 + J+
    r.c_p0 += e.c_0m;
    r.c_p += T(2) * e.c_0m;
    r.c_m += T(0) - e.c_p;
    r.c_0 += T(0) - e.c_0;
    r.c_p += T(0) - e.c_m;
    r.c_const = e.c_const;
    return r;
}

/// -(n/2)(n/2 + 1)
template <class T>
T casimir_value(const T& n) {
    return T(0) - (n / T(2)) * (n / T(2) + T(1));
}

/// C2 = (J+J- + J-J+)/2 - J0J0 as an operator.
template <class T>
DiffOperator<T> casimir_operator(const T& n) {
    auto jp = generator_operator(Generator::plus, n);
    auto j0 = generator_operator(Generator::zero, n);
    auto jm = generator_operator(Generator::minus, n);
    return (jp * jm + jm * jp) * (T(1) / T(2)) - j0 * j0;
}

/// Checks [J0, J+-] = +-J+- and [J+, J-] = -2J0 on x^k for k < basis_size.
template <class T>
bool verify_commutation(const T& n, int basis_size) {
    if (basis_size < 3) throw DomainError("basis_size must be >= 3");
    auto jp = generator_operator(Generator::plus, n);
    auto j0 = generator_operator(Generator::zero, n);
    auto jm = generator_operator(Generator::minus, n);
    for (int k = 0; k < basis_size; ++k) {
        auto x = Polynomial<T>::monomial(k);
        auto c1 = jp(j0(x)) - j0(jp(x));
        auto c2 = jm(j0(x)) - j0(jm(x));
        auto c3 = jp(jm(x)) - jm(jp(x));
        if (!(c1 == T(-1) * jp(x))) return false;
        if (!(c2 == jm(x))) return false;
        if (!(c3 == T(-2) * j0(x))) return false;
    }
    return true;
}

template <class T>
BandMatrix<T> matrix_in_monomial_basis(const Sl2Element<T>& e, int size) {
    return matrix_in_monomial_basis(to_differential_operator(e), size);
}

}  // namespace qes
