/// @file lattice.hpp
/// @brief Heisenberg-Weyl algebra in the Fock space, lattice realizations, Hahn-type stencils, q-generators.
#pragma once
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qes/sl2.hpp"

namespace qes {

/// Normal-ordered element of the Heisenberg-Weyl algebra, sum of c b^p a^q with [a, b] = 1.
class HWExpression {
public:
    using Key = std::pair<int, int>;  ///< (power of b, power of a)

    HWExpression() = default;
    static HWExpression constant(const Rational& c);
    static HWExpression letter_a(int power = 1);
    static HWExpression letter_b(int power = 1);
    static HWExpression term(int p, int q, const Rational& c = 1);

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int p, int q) const;
    bool is_zero() const { return terms_.empty(); }
    /// Largest p - q over the terms (degree shift on b^k).
    int grading() const;
    int max_a_power() const;

    HWExpression& operator+=(const HWExpression& o);
    friend HWExpression operator+(HWExpression x, const HWExpression& y) { return x += y; }
    friend HWExpression operator-(HWExpression x, const HWExpression& y) { return x += y * Rational(-1); }
    friend HWExpression operator*(const HWExpression& x, const Rational& s);
    friend HWExpression operator*(const Rational& s, const HWExpression& x) { return x * s; }
    /// Product, normal-ordered through a^q b^r = sum_k C(q,k) C(r,k) k! b^(r-k) a^(q-k).
    friend HWExpression operator*(const HWExpression& x, const HWExpression& y);
    friend bool operator==(const HWExpression& x, const HWExpression& y) { return x.terms_ == y.terms_; }

    HWExpression pow(int k) const;
    std::string str() const;

private:
    void add(int p, int q, const Rational& c);
    std::map<Key, Rational> terms_;
};

HWExpression commutator(const HWExpression& x, const HWExpression& y);

/// Parses sums and products of a, b, rationals, parentheses and integer powers, e.g. "(a b a)^2 - 1/2 b^2 a".
/// The result is normal-ordered.
HWExpression normal_order(const std::string& text);

/// Normal-orders L phi(b)|0> and keeps the a-free part.
Polynomial<Rational> fock_apply(const HWExpression& l, const Polynomial<Rational>& phi);

/// a -> d/dx, b -> x.
DiffOperator<Rational> to_differential_operator(const HWExpression& l);

/// J+ = b^2 a - n b, J0 = ba - n/2, J- = a.
struct HWTriple {
    HWExpression plus, zero, minus;
};
HWTriple sl2_from_hw(const Rational& n);
/// The quadratic element written in the letters a, b.
HWExpression element_to_hw(const Sl2Element<Rational>& e);
/// (J+J- + J-J+)/2 - J0J0, normal-ordered.
HWExpression hw_casimir(const Rational& n);

/// (1 - q^k)/(1 - q); k at q = 1.
double qnumber(int k, double q);
Rational qnumber(int k, const Rational& q);
Rational qfactorial(int k, const Rational& q);

enum class RealizationKind { continuum, uniform, exponential };

/// continuum: a = d/dx, b = x. uniform: a = D+, b = x(1 - delta D-). exponential: a = Jackson D_q, b = x_q.
struct Realization {
    RealizationKind kind = RealizationKind::continuum;
    Rational delta = 1;
    Rational q = 2;

    static Realization continuum() { return {}; }
    static Realization uniform(const Rational& delta) { return {RealizationKind::uniform, delta, 2}; }
    static Realization exponential(const Rational& q);
};

std::string to_string(RealizationKind k);

/// b^k |0> as a polynomial in x: x^k, x(x - delta)...(x - (k-1) delta), or (k!/{k}_q!) x^k.
Polynomial<Rational> basis_polynomial(int k, const Realization& r);
/// sum_k c_k basis_polynomial(k, r).
Polynomial<Rational> to_polynomial(const std::vector<Rational>& coeffs, const Realization& r);
/// Inverse of to_polynomial.
std::vector<Rational> from_polynomial(const Polynomial<Rational>& p, const Realization& r);
double evaluate(const std::vector<Rational>& coeffs, const Realization& r, double x);

/// Abstract coefficients are shared by all realizations; returns them unchanged.
std::vector<Rational> basis_transport(const std::vector<Rational>& coeffs, const Realization& from,
                                      const Realization& to);

/// The concrete operators a and b of the realization applied to a polynomial in x.
Polynomial<Rational> apply_a(const Polynomial<Rational>& f, const Realization& r);
Polynomial<Rational> apply_b(const Polynomial<Rational>& f, const Realization& r);
/// L applied term by term with the concrete a and b.
Polynomial<Rational> apply(const HWExpression& l, const Polynomial<Rational>& f, const Realization& r);

/// Entry (i, j): coefficient of basis element i in L(basis element j), computed through the concrete operators.
BandMatrix<Rational> realize(const HWExpression& l, const Realization& r, int basis_size);

/// A(x) f(x + delta) - B(x) f(x) + C(x) f(x - delta), scaled by 1/delta^2 inside the coefficients.
struct LatticeStencil {
    Polynomial<Rational> a, b, c;
    Rational delta;

    Polynomial<Rational> apply(const Polynomial<Rational>& f) const;
    double apply(const std::function<double(double)>& f, double x) const;
};

struct HahnParameters {
    Rational a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    Rational delta = 1;

    static HahnParameters hahn(const Rational& n_points, const Rational& alpha, const Rational& beta);
    static HahnParameters continued_hahn(const Rational& n_points, const Rational& mu, const Rational& nu);
    static HahnParameters meixner(const Rational& mu, const Rational& gamma);
    static HahnParameters charlier(const Rational& mu);
};

/// A1 baba(delta a + 1) + A2 b a^2 + A3 ba + A4 a.
HWExpression hahn_hw(const HahnParameters& h);
/// Three-point form of hahn_hw in the uniform realization with spacing h.delta.
LatticeStencil hahn_operator(const HahnParameters& h);
Rational hahn_eigenvalue(const HahnParameters& h, int k);

/// delta A+ (b^2 a - n b + baba) + hahn_hw(h).
HWExpression hahn_qes_hw(const Rational& a_plus, const HahnParameters& h, int n);
/// (n+1) x (n+1) block of hahn_qes_hw; throws InconsistencyError if P_n is not preserved.
BandMatrix<Rational> hahn_qes_operator(const Rational& a_plus, const HahnParameters& h, int n);

/// Coefficients of the eigenvector of an upper-triangular block with eigenvalue m(k, k), normalized to c_k = 1.
std::vector<Rational> triangular_eigenvector(const BandMatrix<Rational>& m, int k);

/// x^k -> ({k}_q - {n}_q) x^(k+1), ({k}_q - n_hat) x^k, {k}_q x^(k-1); scaled adds the factors making the
/// quantum-algebra relations hold.
Polynomial<double> apply_q_generator(Generator g, int n, double q, const Polynomial<double>& p, bool scaled = false);

/// Max coefficient error of the three quommutation relations on x^k, k < basis_size.
double q_relation_defect(int n, double q, int basis_size);

/// (x, f(x)) at x0, x0 + step, ... as CSV with a header row.
std::string lattice_samples_csv(const std::vector<Rational>& coeffs, const Realization& r, double x0, double step,
                                int count);

}  // namespace qes
