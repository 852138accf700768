/// @file band_matrix.hpp
/// @brief Small square matrices stored densely, viewed through their diagonals.
#pragma once
#include <cstddef>
#include <vector>

#include "qes/diff_operator.hpp"
#include "qes/errors.hpp"

namespace qes {

/// Entry (i, j) is the coefficient of basis element i in the image of basis element j.
template <class T>
class BandMatrix {
public:
    BandMatrix() = default;
    explicit BandMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T(0)) {}

    static BandMatrix identity(int n) {
        BandMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, T(1));
        return m;
    }

    int size() const { return n_; }
    const T& operator()(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, const T& v) { a_[idx(i, j)] = v; }

    /// Entries (i, i+offset); offset = j - i.
    std::vector<T> band(int offset) const {
        std::vector<T> out;
        for (int i = 0; i < n_; ++i) {
            int j = i + offset;
            if (j >= 0 && j < n_) out.push_back((*this)(i, j));
        }
        return out;
    }

    /// Largest j - i with a nonzero entry (0 for diagonal or empty).
    int upper_bandwidth() const {
        int w = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!is_zero((*this)(i, j))) w = std::max(w, j - i);
        return w;
    }
    int lower_bandwidth() const {
        int w = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (!is_zero((*this)(i, j))) w = std::max(w, i - j);
        return w;
    }

    /// Leading k x k block.
    BandMatrix block(int k) const {
        if (k > n_) throw DomainError("block larger than matrix");
        BandMatrix m(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m.set(i, j, (*this)(i, j));
        return m;
    }

    BandMatrix transpose() const {
        BandMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.set(j, i, (*this)(i, j));
        return m;
    }

    friend BandMatrix operator*(const BandMatrix& x, const BandMatrix& y) {
        BandMatrix m(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (int j = 0; j < x.n_; ++j) m.a_[m.idx(i, j)] += x(i, k) * y(k, j);
            }
        return m;
    }
    friend bool operator==(const BandMatrix& x, const BandMatrix& y) {
        if (x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!(x.a_[i] == y.a_[i])) return false;
        return true;
    }

    T trace() const {
        T t = T(0);
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_ = 0;
    std::vector<T> a_;
};

inline BandMatrix<double> to_double(const BandMatrix<Rational>& m) {
    BandMatrix<double> d(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) d.set(i, j, m(i, j).get_d());
    return d;
}

/// Column j holds the coefficients of op(x^j) in rows 0..size-1.
template <class T>
BandMatrix<T> matrix_in_monomial_basis(const DiffOperator<T>& op, int size) {
    if (size < 1) throw DomainError("matrix size must be >= 1");
    BandMatrix<T> m(size);
    for (int j = 0; j < size; ++j) {
        Polynomial<T> img = op.apply(Polynomial<T>::monomial(j));
        for (int i = 0; i < size; ++i) m.set(i, j, img.coeff(i));
    }
    return m;
}

}  // namespace qes
