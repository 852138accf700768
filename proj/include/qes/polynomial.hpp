/// @file polynomial.hpp
/// @brief Dense univariate polynomials over Rational or double.
#pragma once
#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "qes/scalar.hpp"

namespace qes {

/// coeffs()[i] is the coefficient of x^i; trailing zeros are always trimmed.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(int k, const T& v = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c[static_cast<std::size_t>(k)] = v;
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
    }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    /// Horner evaluation; U may differ from T (e.g. double at a Rational polynomial).
    template <class U>
    U eval(const U& x) const {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + convert<U>(*it);
        return acc;
    }
    T operator()(const T& x) const { return eval<T>(x); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    /// p(s x + t)
    Polynomial compose_affine(const T& s, const T& t) const {
        Polynomial out;
        const Polynomial lin{t, s};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + constant(*it);
        return out;
    }

    Polynomial monic() const {
        if (c_.empty()) return {};
        T lead = c_.back();
        std::vector<T> c(c_);
        for (auto& v : c) v = v / lead;
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return a * T(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (qes::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const T& s) {
        std::vector<T> r(a.c_);
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

private:
    template <class U>
    static U convert(const T& v) {
        if constexpr (std::is_same_v<U, double> && std::is_same_v<T, Rational>)
            return v.get_d();
        else
            return U(v);
    }
    void trim() {
        while (!c_.empty() && qes::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

inline Polynomial<double> to_double(const Polynomial<Rational>& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.get_d());
    return Polynomial<double>(std::move(c));
}

/// Product of (x - r) over the given roots.
template <class T>
Polynomial<T> from_roots(const std::vector<T>& roots) {
    Polynomial<T> p = Polynomial<T>::constant(T(1));
    for (const auto& r : roots) p = p * Polynomial<T>{T(0) - r, T(1)};
    return p;
}

}  // namespace qes
