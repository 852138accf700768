/// @file errors.hpp
/// @brief Exception types shared by all modules.
#pragma once
#include <stdexcept>
#include <string>

namespace qes {

/// Invalid parameters or arguments outside an operation's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Numerical result failed its own convergence or truncation check.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex eigenvalues where a real spectrum was required.
struct RealityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Perturbation theory hit a degenerate unperturbed level.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear system without solution (e.g. perturbation order not solvable).
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qes
