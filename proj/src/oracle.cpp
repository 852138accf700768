/// @file oracle.cpp
/// @brief Three-point finite differences, LAPACK tridiagonal eigensolver, Richardson extrapolation.
#include "qes/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qes {

namespace {

struct RawSpectrum {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

/// Lowest `count` eigenpairs of R^{-1/2} (K + V) R^{-1/2} on the interior of the grid.
RawSpectrum tridiagonal_solve(const RealFn& potential, const RealFn& weight, int count, const Grid& g, bool vectors) {
    const int n = g.n_points - 2;
    if (count < 1) throw DomainError("count must be >= 1");
    if (count > n) throw DomainError("count exceeds the number of interior grid points");
    const double h = g.spacing, inv = 1.0 / (h * h);
    std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(std::max(n - 1, 1)));
    std::vector<double> s(static_cast<std::size_t>(n), 1.0);
    for (int i = 0; i < n; ++i) {
        const double z = g.z_min + (i + 1) * h;
        const double v = potential(z);
        if (!std::isfinite(v)) throw DomainError("potential is not finite at z = " + std::to_string(z));
        double w = 1.0;
        if (weight) {
            w = weight(z);
            if (!(w > 0) || !std::isfinite(w)) throw DomainError("weight must be positive on the interior");
        }
        s[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(w);
        d[static_cast<std::size_t>(i)] = (2 * inv + v) / w;
    }
    for (int i = 0; i + 1 < n; ++i) e[static_cast<std::size_t>(i)] = -inv * s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i + 1)];

    lapack_int found = 0;
    std::vector<double> w(static_cast<std::size_t>(n));
    std::vector<double> z(vectors ? static_cast<std::size_t>(n) * static_cast<std::size_t>(count) : 1);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(count));
    lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'I', n, d.data(), e.data(), 0.0, 0.0, 1,
                                     count, 0.0, &found, w.data(), z.data(), n, support.data());
    if (info != 0 || found != count) throw AccuracyError("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
    RawSpectrum out;
    out.values.assign(w.begin(), w.begin() + count);
    if (vectors) {
        for (int k = 0; k < count; ++k) {
            std::vector<double> v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                v[static_cast<std::size_t>(i)] =
                    z[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] *
                    s[static_cast<std::size_t>(i)];
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

/// Number of generalized eigenvalues of (T, W) below lambda (Sylvester inertia of T - lambda W).
int inertia_below(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& w,
                  double lambda) {
    int neg = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double off = i == 0 ? 0.0 : b[i - 1] * b[i - 1] / d;
        d = a[i] - lambda * w[i] - off;
        if (d == 0.0) d = -1e-300;
        if (d < 0) ++neg;
    }
    return neg;
}

/// Lowest `count` eigenpairs of (K + V) v = eps W v by bisection on the inertia, vectors by inverse iteration.
RawSpectrum pencil_solve(const RealFn& potential, const RealFn& weight, int count, const Grid& g, bool vectors) {
    const int n = g.n_points - 2;
    if (count < 1) throw DomainError("count must be >= 1");
    if (count > n) throw DomainError("count exceeds the number of interior grid points");
    const double h = g.spacing, inv = 1.0 / (h * h);
    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n), -inv), w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double z = g.z_min + (i + 1) * h;
        const double v = potential(z), wz = weight(z);
        if (!std::isfinite(v)) throw DomainError("potential is not finite at z = " + std::to_string(z));
        if (!(wz > 0) || !std::isfinite(wz)) throw DomainError("weight must be positive on the interior");
        a[static_cast<std::size_t>(i)] = 2 * inv + v;
        w[static_cast<std::size_t>(i)] = wz;
    }
    double lo = -1.0, hi = 1.0;
    for (int it = 0; inertia_below(a, b, w, lo) > 0; ++it) {
        if (it > 200) throw AccuracyError("generalized spectrum is not bounded below");
        lo *= 2;
    }
    for (int it = 0; inertia_below(a, b, w, hi) < count; ++it) {
        if (it > 200) throw AccuracyError("could not bracket the requested eigenvalues");
        hi *= 2;
    }
    RawSpectrum out;
    for (int k = 0; k < count; ++k) {
        double l = lo, u = hi;
        for (int it = 0; it < 200 && u - l > 1e-14 * std::max(1.0, std::fabs(u)); ++it) {
            double mid = 0.5 * (l + u);
            if (inertia_below(a, b, w, mid) > k)
                u = mid;
            else
                l = mid;
        }
        out.values.push_back(0.5 * (l + u));
        lo = l;
    }
    if (!vectors) return out;
    for (int k = 0; k < count; ++k) {
        const double lam = out.values[static_cast<std::size_t>(k)];
        const double shift = lam + 1e-10 * std::max(1.0, std::fabs(lam));
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = 1.0 + 0.01 * std::sin(0.37 * i);
        for (int it = 0; it < 4; ++it) {
            std::vector<double> dl(b.begin(), b.end() - 1), du(b.begin(), b.end() - 1), d(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - shift * w[static_cast<std::size_t>(i)];
                x[static_cast<std::size_t>(i)] *= w[static_cast<std::size_t>(i)];
            }
            lapack_int info = LAPACKE_dgtsv(LAPACK_COL_MAJOR, n, 1, dl.data(), d.data(), du.data(), x.data(), n);
            if (info != 0) throw AccuracyError("inverse iteration failed");
            double norm = 0.0;
            for (double v : x) norm = std::max(norm, std::fabs(v));
            for (double& v : x) v /= norm;
        }
        out.vectors.push_back(std::move(x));
    }
    return out;
}

void check_grid(OracleDomain domain, const Grid& g) {
    if (g.n_points < 200) throw DomainError("grid needs at least 200 points");
    if (!(g.z_max > g.z_min)) throw DomainError("grid must have z_max > z_min");
    if (domain == OracleDomain::half_line && g.z_min != 0.0) throw DomainError("half-line grids start at 0");
}

OracleResult solve_impl(const RealFn& potential, const RealFn& weight, OracleDomain domain, int count, const Grid& g,
                        double tol) {
    check_grid(domain, g);
    auto run = weight ? pencil_solve : tridiagonal_solve;
    RawSpectrum coarse = run(potential, weight, count, g, false);
    RawSpectrum fine = run(potential, weight, count, g.refined(), true);
    OracleResult r;
    r.grid = g;
    for (int k = 0; k < count; ++k) {
        const double eh = coarse.values[static_cast<std::size_t>(k)], eh2 = fine.values[static_cast<std::size_t>(k)];
        if (std::fabs(eh - eh2) > 16 * tol * std::max(1.0, std::fabs(eh2))) {
            std::ostringstream msg;
            msg << "Richardson extrapolation did not converge for level " << k << ": E_h = " << eh
                << ", E_h/2 = " << eh2;
            throw AccuracyError(msg.str());
        }
        r.eigenvalues.push_back((4 * eh2 - eh) / 3);
        const auto& v = fine.vectors[static_cast<std::size_t>(k)];
        double peak = 0.0;
        for (double x : v) peak = std::max(peak, std::fabs(x));
        const bool left_bad = domain == OracleDomain::line && std::fabs(v.front()) > 1e-8 * peak;
        if (left_bad || std::fabs(v.back()) > 1e-8 * peak) {
            std::ostringstream msg;
            msg << "domain truncation: level " << k << " does not decay at the grid edge";
            throw AccuracyError(msg.str());
        }
        r.node_counts.push_back(count_nodes(v));
        r.vectors.push_back(v);
    }
    return r;
}

}  // namespace

Grid Grid::uniform(double z_min, double z_max, int n_points) {
    if (n_points < 3) throw DomainError("grid needs at least 3 points");
    return Grid{z_min, z_max, n_points, (z_max - z_min) / (n_points - 1)};
}

OracleResult solve(const RealFn& potential, OracleDomain domain, int count, const Grid& grid, double tol) {
    return solve_impl(potential, nullptr, domain, count, grid, tol);
}

OracleResult solve_weighted(const RealFn& potential, const RealFn& weight, OracleDomain domain, int count,
                            const Grid& grid, double tol) {
    if (!weight) throw DomainError("weight function required");
    return solve_impl(potential, weight, domain, count, grid, tol);
}

int count_nodes(const std::vector<double>& v) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::fabs(x));
    const double floor = 1e-9 * peak;
    int nodes = 0, last = 0;
    for (double x : v) {
        if (std::fabs(x) <= floor) continue;
        int sgn = x > 0 ? 1 : -1;
        if (last != 0 && sgn != last) ++nodes;
        last = sgn;
    }
    return nodes;
}

Grid auto_grid(const RealFn& potential, const RealFn& weight, OracleDomain domain, double e_target, int n_points,
               double center, double decay, double margin) {
    auto excess = [&](double z) {
        double v = potential(z) - e_target * (weight ? weight(z) : 1.0);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    auto march = [&](double start, double dir) {
        const double dz = 2e-3;
        double integral = 0.0, z = start;
        for (int step = 0; step < 2000000; ++step) {
            z += dir * dz;
            double ex = excess(z);
            if (ex <= 0) {
                integral = 0.0;
                continue;
            }
            if (std::isinf(ex)) return z;
            integral += std::sqrt(ex) * dz;
            if (integral >= decay && (ex >= margin || integral >= 2 * decay)) return z;
        }
        throw DomainError("potential does not confine: no truncation point found");
    };
    if (domain == OracleDomain::half_line) return Grid::uniform(0.0, march(std::max(center, 1e-6), 1.0), n_points);
    return Grid::uniform(march(center, -1.0), march(center, 1.0), n_points);
}

double raw_eigenvalue(const RealFn& potential, const RealFn& weight, OracleDomain domain, int index, const Grid& grid) {
    (void)domain;
    auto run = weight ? pencil_solve : tridiagonal_solve;
    return run(potential, weight, index + 1, grid, false).values.back();
}

double convergence_ratio(const RealFn& potential, OracleDomain domain, int index, const Grid& grid) {
    check_grid(domain, grid);
    Grid g1 = grid, g2 = g1.refined(), g3 = g2.refined(), g4 = g3.refined();
    double e1 = raw_eigenvalue(potential, nullptr, domain, index, g1);
    double e2 = raw_eigenvalue(potential, nullptr, domain, index, g2);
    double e3 = raw_eigenvalue(potential, nullptr, domain, index, g3);
    double e4 = raw_eigenvalue(potential, nullptr, domain, index, g4);
    double r1 = (4 * e2 - e1) / 3, r2 = (4 * e3 - e2) / 3, r3 = (4 * e4 - e3) / 3;
    return (r1 - r2) / (r2 - r3);
}

OracleResult solve_case(const CaseSpec& spec, int count, int n_points, double tol) {
    if (!has_coordinate_form(spec) || spec.domain == DomainKind::interval)
        throw DomainError("case " + to_string(spec.id) + " is not solved by the oracle (periodic or algebraic only)");
    const OracleDomain domain = is_radial(spec) ? OracleDomain::half_line : OracleDomain::line;
    RealFn v = [spec](double z) { return frame_potential(spec, z, true); };
    RealFn w;
    double sign = 1.0;
    if (spec.kind == Kind::second_type) {
        double probe = spectral_weight(spec, domain == OracleDomain::half_line ? 1.0 : 0.0);
        sign = probe < 0 ? -1.0 : 1.0;
        w = [spec, sign](double z) { return sign * spectral_weight(spec, z); };
    }
    // target: the largest algebraic eigenvalue in the oracle's convention
    double target = 0.0;
    try {
        for (const auto& p : algebraic_eigenpairs(spec))
            target = std::max(target, spec.kind == Kind::first_type ? p.energy_full : sign * p.eps);
    } catch (const RealityError&) {
    }
    // minimum of the effective potential as window center
    double center = 0.0, best = std::numeric_limits<double>::infinity();
    const double lo = domain == OracleDomain::half_line ? 0.05 : -20.0;
    for (double z = lo; z <= 20.0; z += 0.05) {
        double ex = v(z) - target * (w ? w(z) : 1.0);
        if (std::isfinite(ex) && ex < best) {
            best = ex;
            center = z;
        }
    }
    // a finite asymptote caps the window energy, otherwise the march never leaves the plateau
    double window_energy = target + 5.0 * count;
    if (!w) {
        for (double dir : {-1.0, 1.0}) {
            if (domain == OracleDomain::half_line && dir < 0) continue;
            const double far = v(center + dir * 200.0), mid = v(center + dir * 100.0);
            if (std::isfinite(far) && std::fabs(far - mid) < 1e-6 * (1.0 + std::fabs(far)) && far > target)
                window_energy = std::min(window_energy, 0.5 * (target + far));
        }
    }
    double decay = 25.0;
    for (int attempt = 0;; ++attempt) {
        Grid g = auto_grid(v, w, domain, window_energy, n_points, center, decay);
        try {
            OracleResult r = w ? solve_weighted(v, w, domain, count, g, tol) : solve(v, domain, count, g, tol);
            if (sign < 0) {
                for (auto& e : r.eigenvalues) e = -e;
            }
            return r;
        } catch (const AccuracyError& err) {
            const std::string what = err.what();
            if (attempt >= 3) throw;
            if (what.find("truncation") != std::string::npos)
                decay *= 1.6;
            else if (what.find("Richardson") != std::string::npos && n_points < 16001)
                n_points = 2 * n_points - 1;
            else
                throw;
        }
    }
}

}  // namespace qes
