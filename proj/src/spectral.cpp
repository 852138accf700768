#include "qes/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace qes {

namespace {

bool is_tridiagonal(const BandMatrix<Rational>& m) { return m.upper_bandwidth() <= 1 && m.lower_bandwidth() <= 1; }

Polynomial<Rational> tridiagonal_char_poly(const BandMatrix<Rational>& m) {
    using P = Polynomial<Rational>;
    P prev2, prev = P::constant(1);
    for (int k = 0; k < m.size(); ++k) {
        P cur = prev * P{Rational(0) - m(k, k), Rational(1)};
        if (k > 0) cur -= prev2 * Rational(m(k, k - 1) * m(k - 1, k));
        prev2 = prev;
        prev = cur;
    }
    return prev;
}

BandMatrix<Rational> to_hessenberg(BandMatrix<Rational> h) {
    const int n = h.size();
    for (int k = 1; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!is_zero(h(i, k - 1))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k) {
            for (int j = 0; j < n; ++j) {
                Rational t = h(piv, j);
                h.set(piv, j, h(k, j));
                h.set(k, j, t);
            }
            for (int i = 0; i < n; ++i) {
                Rational t = h(i, piv);
                h.set(i, piv, h(i, k));
                h.set(i, k, t);
            }
        }
        for (int i = k + 1; i < n; ++i) {
            if (is_zero(h(i, k - 1))) continue;
            Rational f = h(i, k - 1) / h(k, k - 1);
            for (int j = 0; j < n; ++j) h.set(i, j, h(i, j) - f * h(k, j));
            for (int r = 0; r < n; ++r) h.set(r, k, h(r, k) + f * h(r, i));
        }
    }
    return h;
}

Polynomial<Rational> hessenberg_char_poly(const BandMatrix<Rational>& h) {
    using P = Polynomial<Rational>;
    const int n = h.size();
    std::vector<P> p(static_cast<std::size_t>(n) + 1);
    p[0] = P::constant(1);
    for (int k = 1; k <= n; ++k) {
        P cur = p[static_cast<std::size_t>(k - 1)] * P{Rational(0) - h(k - 1, k - 1), Rational(1)};
        Rational prod = 1;
        for (int i = 1; i < k; ++i) {
            prod *= h(k - i, k - i - 1);
            if (is_zero(prod)) break;
            cur -= p[static_cast<std::size_t>(k - i - 1)] * Rational(prod * h(k - i - 1, k - 1));
        }
        p[static_cast<std::size_t>(k)] = cur;
    }
    return p[static_cast<std::size_t>(n)];
}

Eigen::MatrixXd dense(const BandMatrix<double>& m) {
    Eigen::MatrixXd a(m.size(), m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) a(i, j) = m(i, j);
    return a;
}

Polynomial<double> monic_vector(const Eigen::VectorXd& v) {
    double mx = v.cwiseAbs().maxCoeff();
    int top = 0;
    for (int i = 0; i < v.size(); ++i)
        if (std::fabs(v(i)) > 1e-10 * mx) top = i;
    std::vector<double> c(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) c[static_cast<std::size_t>(i)] = v(i) / v(top);
    return Polynomial<double>(std::move(c));
}

}  // namespace

Polynomial<Rational> char_poly(const BandMatrix<Rational>& m) {
    if (m.size() == 0) return Polynomial<Rational>::constant(1);
    if (is_tridiagonal(m)) return tridiagonal_char_poly(m);
    return hessenberg_char_poly(to_hessenberg(m));
}

std::vector<double> positivity_products(const BandMatrix<double>& m) {
    std::vector<double> out;
    for (int k = 0; k + 1 < m.size(); ++k) out.push_back(m(k + 1, k) * m(k, k + 1));
    return out;
}

std::vector<std::pair<double, double>> eigenvalues_complex(const BandMatrix<double>& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(dense(m), false);
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < m.size(); ++i) out.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
    std::sort(out.begin(), out.end());
    return out;
}

SpectrumResult eigen(const BandMatrix<double>& m) {
    SpectrumResult res;
    const int n = m.size();
    if (n == 0) return res;
    Eigen::MatrixXd a = dense(m);
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());

    bool tri = m.upper_bandwidth() <= 1 && m.lower_bandwidth() <= 1;
    auto prods = positivity_products(m);
    bool balanceable = tri && std::all_of(prods.begin(), prods.end(), [](double p) { return p > 0; });

    if (balanceable) {
        Eigen::VectorXd d(n);
        d(0) = 1.0;
        for (int k = 0; k + 1 < n; ++k) d(k + 1) = d(k) * std::sqrt(m(k + 1, k) / m(k, k + 1));
        Eigen::MatrixXd s = d.cwiseInverse().asDiagonal() * a * d.asDiagonal();
        s = 0.5 * (s + s.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
        for (int i = 0; i < n; ++i) {
            res.eigenvalues.push_back(es.eigenvalues()(i));
            Eigen::VectorXd v = d.asDiagonal() * es.eigenvectors().col(i);
            res.eigenvectors.push_back(monic_vector(v));
            res.eigenvector_values.push_back(es.eigenvalues()(i));
        }
        res.balanced = true;
        return res;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    for (int i = 0; i < n; ++i) {
        auto ev = es.eigenvalues()(i);
        if (std::fabs(ev.imag()) > 1e-9 * scale) {
            std::ostringstream msg;
            msg << "complex eigenvalue " << ev.real() << (ev.imag() < 0 ? " - " : " + ") << std::fabs(ev.imag())
                << "i; positivity test t(k+1,k) t(k,k+1) > 0 fails";
            if (tri) {
                msg << " (products:";
                for (double p : prods) msg << ' ' << p;
                msg << ')';
            } else {
                msg << " (block is not tridiagonal)";
            }
            throw RealityError(msg.str());
        }
        res.eigenvalues.push_back(ev.real());
    }
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());

    // Cluster coincident eigenvalues, then take the numerical null space of (M - lambda I).
    std::vector<double> distinct;
    for (double ev : res.eigenvalues) {
        if (!distinct.empty() && std::fabs(ev - distinct.back()) <= 1e-6 * std::max(1.0, std::fabs(ev))) continue;
        distinct.push_back(ev);
    }
    for (double lam : distinct) {
        Eigen::MatrixXd b = a - lam * Eigen::MatrixXd::Identity(n, n);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        for (int i = 0; i < n; ++i) {
            if (sv(i) <= 1e-7 * scale) {
                res.eigenvectors.push_back(monic_vector(svd.matrixV().col(i)));
                res.eigenvector_values.push_back(lam);
            }
        }
    }
    return res;
}

SpectrumResult eigen(const BandMatrix<Rational>& m) {
    SpectrumResult res = eigen(to_double(m));
    res.char_poly = char_poly(m);
    res.ers_symmetric = ers_check(m);
    return res;
}

std::vector<Polynomial<Rational>> null_space(const BandMatrix<Rational>& m) {
    const int n = m.size();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (!is_zero(a[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rational inv = Rational(1) / a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || is_zero(a[i][col])) continue;
            Rational f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<Polynomial<Rational>> basis;
    for (int free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = Rational(0) - a[r][free];
        basis.push_back(Polynomial<Rational>(std::move(v)).monic());
    }
    return basis;
}

Rational rationalize(double v, long max_den) {
    // continued fraction convergents
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(x);
        if (std::fabs(a) > 1e15) break;
        long ai = static_cast<long>(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double frac = x - a;
        if (std::fabs(frac) < 1e-15) break;
        x = 1.0 / frac;
    }
    Rational r(h1, k1 == 0 ? 1 : k1);
    r.canonicalize();
    return r;
}

std::vector<double> real_roots(const Polynomial<Rational>& p, double imag_tol) {
    const int d = p.degree();
    std::vector<double> out;
    if (d < 1) return out;
    auto q = to_double(p.monic());
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -q.coeff(i);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    auto dq = q.derivative();
    for (int i = 0; i < d; ++i) {
        auto ev = es.eigenvalues()(i);
        if (std::fabs(ev.imag()) > imag_tol * std::max(1.0, std::fabs(ev.real()))) continue;
        double x = ev.real();
        for (int it = 0; it < 3; ++it) {
            double f = q.eval(x), g = dq.eval(x);
            if (g == 0.0) break;
            double nx = x - f / g;
            if (!std::isfinite(nx) || std::fabs(nx - x) > 1e-6 * std::max(1.0, std::fabs(x))) break;
            x = nx;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalEigenpair> rational_eigenpairs(const BandMatrix<Rational>& m) {
    auto cp = char_poly(m);
    std::vector<Rational> roots;
    for (double r : real_roots(cp, 1e-6)) {
        Rational q = rationalize(r);
        if (!is_zero(cp(q))) continue;
        if (std::find(roots.begin(), roots.end(), q) == roots.end()) roots.push_back(q);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<RationalEigenpair> out;
    for (const auto& lam : roots) {
        BandMatrix<Rational> b = m;
        for (int i = 0; i < m.size(); ++i) b.set(i, i, m(i, i) - lam);
        for (auto& v : null_space(b)) out.push_back({lam, v});
    }
    return out;
}

bool ers_check(const BandMatrix<Rational>& m) {
    for (int i = 0; i < m.size(); ++i)
        if (!is_zero(m(i, i))) return false;
    BandMatrix<Rational> m2 = m * m;
    BandMatrix<Rational> m3 = m2 * m;
    BandMatrix<Rational> m5 = m3 * m2;
    return is_zero(m.trace()) && is_zero(m3.trace()) && is_zero(m5.trace());
}

PairedSpectrum ers_paired_spectrum(const BandMatrix<Rational>& m) {
    if (!ers_check(m)) throw DomainError("block has no energy-reflection symmetry");
    auto cp = char_poly(m);
    PairedSpectrum ps;
    ps.p = cp.degree() % 2;
    std::vector<Rational> s;
    for (int i = ps.p; i <= cp.degree(); i += 2) s.push_back(cp.coeff(i));
    for (int i = ps.p + 1; i <= cp.degree(); i += 2)
        if (!is_zero(cp.coeff(i))) throw InconsistencyError("char poly is not of the form eps^p s(eps^2)");
    ps.reduced = Polynomial<Rational>(std::move(s));
    ps.squares = real_roots(ps.reduced);
    return ps;
}

}  // namespace qes
