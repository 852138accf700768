/// @file catalogue.hpp
/// @brief The QES catalogue: operators, potentials, gauge factors and algebraic eigenpairs per case.
#pragma once
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qes/band_matrix.hpp"
#include "qes/sl2.hpp"

namespace qes {

enum class CaseId { I, II, III, IV, V, VI, VII, VIII, IX, X, X_alt, XI, XII_I, XII_II, XII_III };
enum class Kind { first_type, second_type };
enum class DomainKind { real_line, half_line, interval };

std::string to_string(CaseId id);
CaseId parse_case_id(const std::string& text);
const std::vector<CaseId>& all_cases();

/// Lame solution types: eta1, eta2 (i = 1..3), eta3 (i = 1..3), eta4.
enum class LameType { eta1, eta2, eta3, eta4 };

struct CaseSpec {
    CaseId id = CaseId::I;
    std::map<std::string, Rational> params;
    Kind kind = Kind::first_type;
    DomainKind domain = DomainKind::real_line;
    LameType lame_type = LameType::eta1;  ///< Case XI only
    int lame_index = 1;                   ///< Case XI, i in eta2_i / eta3_i

    const Rational& at(const std::string& key) const;
    double d(const std::string& key) const { return at(key).get_d(); }
    bool has(const std::string& key) const { return params.count(key) != 0; }
    /// Integer mark of the algebraic block.
    int mark() const;
};

/// Parameter names accepted by a case, with default values.
const std::vector<std::pair<std::string, Rational>>& case_defaults(CaseId id);

/// Defaults overridden by `overrides`; validates ranges. `variant` selects the Case XI solution type
/// ("eta1", "eta2_1", ..., "eta3_3", "eta4").
CaseSpec make_case(CaseId id, const std::map<std::string, Rational>& overrides = {}, const std::string& variant = "");

/// The algebraic operator in the case's x variable (tau / xi for XI-XII).
DiffOperator<Rational> case_operator(const CaseSpec& spec);
/// The same operator written as a quadratic sl2 element with the block's mark.
Sl2Element<Rational> case_element(const CaseSpec& spec);
int block_size(const CaseSpec& spec);

BandMatrix<Rational> band_matrix(const CaseSpec& spec);
Polynomial<Rational> characteristic_equation(const CaseSpec& spec);

/// Additive constant K with V_full = V_printed + K.
Rational potential_constant(const CaseSpec& spec);
/// Physical potential (second type: the weighted potential V~). include_constant=false gives the printed form.
double potential(const CaseSpec& spec, double z, bool include_constant = true);
/// Potential of the one-dimensional reduced problem (adds the centrifugal term for radial cases).
double frame_potential(const CaseSpec& spec, double z, bool include_constant = true);
/// w(z) = -x'(z)^2 / P(x(z)); constant for first-type cases.
double spectral_weight(const CaseSpec& spec, double z);
/// (D-1)(D-3)/(4 r^2) for radial cases, 0 otherwise.
double centrifugal(const CaseSpec& spec, double r);
bool is_radial(const CaseSpec& spec);
bool has_coordinate_form(const CaseSpec& spec);

struct GaugeMap {
    std::function<double(double)> x_of_z, dx_of_z, ddx_of_z;
    std::function<double(double)> A_of_z;   ///< prepotential, Psi = p(x) e^{-A} in the reduced frame
    std::function<double(double)> dA_of_z;  ///< A'
    std::function<double(double)> ddA_of_z;
    std::function<double(double)> y_of_z;  ///< -A'
    std::function<double(double)> rho_of_x;
    double spectral_scale = 1.0;  ///< w = spectral_scale * rho
};
GaugeMap gauge(const CaseSpec& spec);

struct AlgebraicEigenpair {
    double eps = 0.0;
    double energy = 0.0;       ///< printed-potential convention
    double energy_full = 0.0;  ///< full-potential convention (w eps for first type)
    double charge = 0.0;       ///< second type: coupling quantized by eps
    Polynomial<double> poly;
};

/// Energy of an algebraic state from its block eigenvalue.
double energy_of(const CaseSpec& spec, double eps, bool include_constant);
/// Ascending in energy for first-type cases, descending in eps for second-type cases.
std::vector<AlgebraicEigenpair> algebraic_eigenpairs(const CaseSpec& spec);

/// Psi(z); radial cases return the d-dimensional radial function R(r) = p r^{l-c} e^{...}.
double assemble_eigenfunction(const CaseSpec& spec, const AlgebraicEigenpair& pair, double z);
bool normalizable(const CaseSpec& spec);

/// max |(-d^2 + V - w eps) Psi| / (1 + |Psi|) over the grid with Psi scaled to unit maximum, in the reduced frame.
/// For XI the check is the algebraic Lame equation in xi, for XII the operator equation in tau.
double residual(const CaseSpec& spec, const AlgebraicEigenpair& pair, const std::vector<double>& grid, double h = 1e-3);

/// Exact T p - eps p for the case operator.
Polynomial<Rational> exact_residual(const CaseSpec& spec, const Rational& eps, const Polynomial<Rational>& p);

/// Kinds I-III elliptic operators in tau.
DiffOperator<Rational> elliptic_operator(const CaseSpec& spec);

/// Algebraic Lame operator conjugated by the solution-type prefactor, as an sl2 element.
Sl2Element<Rational> lame_element(int m, const Rational& a1, const Rational& a2, const Rational& a3, LameType type,
                                  int i = 1);
BandMatrix<Rational> lame_matrix(int m, const Rational& a1, const Rational& a2, const Rational& a3, LameType type,
                                 int i = 1);
/// Prefactor of the Lame solution type at xi.
double lame_prefactor(LameType type, int i, double a1, double a2, double a3, double xi);

}  // namespace qes
