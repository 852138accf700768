/// @file diff_operator.hpp
/// @brief Linear differential operators with polynomial coefficients.
#pragma once
#include <cstddef>
#include <vector>

#include "qes/polynomial.hpp"

namespace qes {

/// sum_j coeff(j)(x) d^j/dx^j. For a quadratic sl2 element coeff(2) = -P4, coeff(1) = P3, coeff(0) = P2.
template <class T>
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<Polynomial<T>> c) : c_(std::move(c)) { trim(); }

    static DiffOperator multiplication(const Polynomial<T>& p) { return DiffOperator({p}); }
    static DiffOperator identity() { return multiplication(Polynomial<T>::constant(T(1))); }
    static DiffOperator derivative(int k = 1) {
        std::vector<Polynomial<T>> c(static_cast<std::size_t>(k) + 1);
        c[static_cast<std::size_t>(k)] = Polynomial<T>::constant(T(1));
        return DiffOperator(std::move(c));
    }

    /// Highest derivative with nonzero coefficient, -1 for the zero operator.
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Polynomial<T>>& coeffs() const { return c_; }
    Polynomial<T> coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(j)] : Polynomial<T>();
    }

    Polynomial<T> apply(const Polynomial<T>& p) const {
        Polynomial<T> out, d = p;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            out += c_[j] * d;
            d = d.derivative();
        }
        return out;
    }
    Polynomial<T> operator()(const Polynomial<T>& p) const { return apply(p); }

    /// Degree shift on monomials: max over j of deg(coeff j) - j.
    int grading() const {
        int g = -1000000;
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (!c_[j].is_zero()) g = std::max(g, c_[j].degree() - static_cast<int>(j));
        return g;
    }

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
        std::vector<Polynomial<T>> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
        return DiffOperator(std::move(c));
    }
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) { return a + b * T(-1); }
    friend DiffOperator operator*(const DiffOperator& a, const T& s) {
        std::vector<Polynomial<T>> c(a.c_);
        for (auto& p : c) p = p * s;
        return DiffOperator(std::move(c));
    }
    friend DiffOperator operator*(const T& s, const DiffOperator& a) { return a * s; }

    /// Composition (a*b)(f) = a(b(f)), expanded by the Leibniz rule.
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<Polynomial<T>> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            // d^i (q d^j) = sum_m C(i,m) q^(m) d^(i-m+j)
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                Polynomial<T> q = b.c_[j];
                T binom = T(1);
                for (std::size_t m = 0; m <= i && !q.is_zero(); ++m) {
                    c[i - m + j] += a.c_[i] * q * binom;
                    binom = binom * T(static_cast<long>(i - m)) / T(static_cast<long>(m + 1));
                    q = q.derivative();
                }
            }
        }
        return DiffOperator(std::move(c));
    }
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Polynomial<T>> c_;
};

inline DiffOperator<double> to_double(const DiffOperator<Rational>& op) {
    std::vector<Polynomial<double>> c;
    for (const auto& p : op.coeffs()) c.push_back(to_double(p));
    return DiffOperator<double>(std::move(c));
}

}  // namespace qes
