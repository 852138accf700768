/// @file oracle.hpp
/// @brief Finite-difference Schrodinger eigensolver on the line and the half-line.
#pragma once
#include <functional>
#include <vector>

#include "qes/catalogue.hpp"

namespace qes {

enum class OracleDomain { line, half_line };

struct Grid {
    double z_min = 0.0, z_max = 0.0;
    int n_points = 0;
    double spacing = 0.0;

    static Grid uniform(double z_min, double z_max, int n_points);
    /// Same window, spacing halved.
    Grid refined() const { return uniform(z_min, z_max, 2 * n_points - 1); }
};

struct OracleResult {
    std::vector<double> eigenvalues;  ///< Richardson-extrapolated, ascending
    std::vector<int> node_counts;
    Grid grid;                                ///< coarse grid; eigenvectors live on grid.refined()
    std::vector<std::vector<double>> vectors;  ///< samples at interior points of the refined grid
};

using RealFn = std::function<double(double)>;

/// (-d^2 + V) psi = E psi with Dirichlet ends; half_line requires z_min = 0.
OracleResult solve(const RealFn& potential, OracleDomain domain, int count, const Grid& grid, double tol = 1e-4);

/// (-d^2 + V) psi = eps w psi with w > 0 on the interior.
OracleResult solve_weighted(const RealFn& potential, const RealFn& weight, OracleDomain domain, int count,
                            const Grid& grid, double tol = 1e-4);

/// Sign changes, ignoring samples below 1e-9 of the maximum magnitude.
int count_nodes(const std::vector<double>& v);

/// Window whose edges satisfy V - E w >= E_margin and carry a WKB decay of at least `decay` e-folds.
Grid auto_grid(const RealFn& potential, const RealFn& weight, OracleDomain domain, double e_target,
               int n_points = 4001, double center = 0.0, double decay = 25.0, double margin = 50.0);

/// Raw eigenvalue `index` on the grid (no extrapolation).
double raw_eigenvalue(const RealFn& potential, const RealFn& weight, OracleDomain domain, int index, const Grid& grid);

/// (R(h) - R(h/2)) / (R(h/2) - R(h/4)) with R the two-grid Richardson value; about 16 for a smooth problem.
double convergence_ratio(const RealFn& potential, OracleDomain domain, int index, const Grid& grid);

/// Oracle for a catalogue case in its reduced frame with the full potential. First type: eigenvalues are
/// energies E_full; second type: generalized eigenvalues eps.
OracleResult solve_case(const CaseSpec& spec, int count, int n_points = 4001, double tol = 1e-4);

}  // namespace qes
