/// @file lame.cpp
/// @brief Algebraic Lame blocks for the four solution types.
#include <array>
#include <cmath>
#include <utility>

#include "qes/catalogue.hpp"

namespace qes {

namespace {

/// (special root, other two) for the permuted types.
std::array<Rational, 3> permuted(const Rational& a1, const Rational& a2, const Rational& a3, int i) {
    if (i < 1 || i > 3) throw DomainError("Lame index must be 1, 2 or 3");
    std::array<Rational, 3> r{a1, a2, a3};
    std::swap(r[0], r[static_cast<std::size_t>(i - 1)]);
    return r;
}

}  // namespace

Sl2Element<Rational> lame_element(int m, const Rational& a1, const Rational& a2, const Rational& a3, LameType type,
                                  int i) {
    auto r = (type == LameType::eta2 || type == LameType::eta3) ? permuted(a1, a2, a3, i)
                                                                : std::array<Rational, 3>{a1, a2, a3};
    const Rational &s = r[0], &t = r[1], &u = r[2];
    const Rational sum = s + t + u, pairs = s * t + s * u + t * u;
    Sl2Element<Rational> e;
    e.c_p0 = 2;
    e.c_pm = -2 * sum;
    e.c_0m = 2 * pairs;
    e.c_mm = -4 * s * t * u;
    switch (type) {
        case LameType::eta1: {
            if (m < 0 || m % 2 != 0) throw DomainError("eta1 needs even m");
            Rational k = m / 2;
            e.n = k;
            e.c_p = 2 * (3 * k + 1);
            e.c_0 = -2 * (k + 1) * sum;
            e.c_m = 2 * (k + 1) * pairs;
            e.c_const = -2 * k * (k + 1) * sum;
            break;
        }
        case LameType::eta2: {
            if (m < 1 || m % 2 != 1) throw DomainError("eta2 needs odd m");
            Rational k = (m - 1) / 2;
            e.n = k;
            e.c_p = 6 * (k + 1);
            e.c_0 = -2 * (s * (k + 1) + (t + u) * (k + 2));
            e.c_m = 2 * ((s * t + s * u) * (k + 1) + t * u * (k + 3));
            e.c_const = -2 * s * k * (k + 1) - (t + u) * (2 * k * k + 4 * k + 1);
            break;
        }
        case LameType::eta3: {
            if (m < 2 || m % 2 != 0) throw DomainError("eta3 needs even m >= 2");
            Rational k = m / 2;
            e.n = k - 1;
            e.c_p = 2 * (3 * k + 2);
            e.c_0 = -2 * (s * (k + 2) + (t + u) * (k + 1));
            e.c_m = 2 * ((s * t + s * u) * (k + 2) + t * u * k);
            e.c_const = -2 * s * k * (k + 1) - (t + u) * (2 * k * k - 1);
            break;
        }
        case LameType::eta4:
        default: {
            if (m < 3 || m % 2 != 1) throw DomainError("eta4 needs odd m >= 3");
            Rational k = (m - 1) / 2;
            e.n = k - 1;
            e.c_p = 2 * (3 * k + 4);
            e.c_0 = -2 * (k + 2) * sum;
            e.c_m = 2 * (k + 2) * pairs;
            e.c_const = -2 * k * (k + 1) * sum;
            break;
        }
    }
    return e;
}

BandMatrix<Rational> lame_matrix(int m, const Rational& a1, const Rational& a2, const Rational& a3, LameType type,
                                 int i) {
    auto e = lame_element(m, a1, a2, a3, type, i);
    return matrix_in_monomial_basis(e, static_cast<int>(e.n.get_num().get_si()) + 1);
}

double lame_prefactor(LameType type, int i, double a1, double a2, double a3, double xi) {
    const double f1 = xi - a1, f2 = xi - a2, f3 = xi - a3;
    const double f[3] = {f1, f2, f3};
    switch (type) {
        case LameType::eta1:
            return 1.0;
        case LameType::eta2:
            return std::sqrt(f[i - 1]);
        case LameType::eta3:
            return std::sqrt(f1 * f2 * f3 / f[i - 1]);
        case LameType::eta4:
        default:
            return std::sqrt(f1 * f2 * f3);
    }
}

}  // namespace qes
