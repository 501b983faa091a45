#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypoly/eqclass.hpp"
#include "hypoly/quad.hpp"
#include "hypoly/report.hpp"

namespace hypoly {

/// Knobs shared by every verification suite.  tol_override, when set,
/// replaces each check's default tolerance (the CLI wires HYPOLY_TOL here);
/// degrees are always additionally capped by the class cutoff.
struct SuiteOptions {
    int l_max = 8;
    std::optional<double> tol_override;
    QuadratureSpec quad;
};

/// Monic solutions: ODE residual at the coefficient level, degree and
/// leading coefficient, and l simple zeros inside the interval, for
/// l < min(Lambda, l_max + 1).
Report suite_ode(const EquationClass& cls, const SuiteOptions& opt = {});

/// Pairwise weighted orthogonality <Psi_l, Psi_k> = 0 (l != k), normalized
/// by the quadrature norms.
Report suite_orthogonality(const EquationClass& cls, const SuiteOptions& opt = {});

/// Three-term recurrence Psi_{l+1} = (s - b_l) Psi_l - g_l Psi_{l-1} with
/// b_l, g_l from quadrature moments, plus g_l = ||Psi_l||^2/||Psi_{l-1}||^2.
Report suite_recurrence(const EquationClass& cls, const SuiteOptions& opt = {});

/// Ladder exactness (A_m, A_m+, H_m on Psi_{l,m}), the pointwise form of
/// H_m, intertwining across levels, chain reconstruction, the m-recurrence,
/// and the norm ladder vs quadrature.
Report suite_ladder(const EquationClass& cls, const SuiteOptions& opt = {});

/// L_+/L_-/L_0 commutator case table, K normal forms, Jacobi identity,
/// matrix elements sqrt(lambda_l - lambda_m); adds the finite-string checks
/// when tau = sigma' and a note classifying L_- on the ground rep.
Report suite_algebra(const EquationClass& cls, const SuiteOptions& opt = {});

/// Truncated shift-matrix identities at N = 16 for m = 0 and m = 1.
/// UnsupportedClass for the finite-cutoff classes.
Report suite_shift(const EquationClass& cls, const SuiteOptions& opt = {});

/// Casimir spectrum for l <= min(l_max, 6).  UnsupportedClass for the
/// Heisenberg-Weyl classes.
Report suite_casimir(const EquationClass& cls, const SuiteOptions& opt = {});

/// Coherent-state eigenproperty on a z-grid, norm identity, and the
/// resolution-of-identity diagonals.  UnsupportedClass for the s^2-1, s^2,
/// s^2+1 classes.
Report suite_coherent(const EquationClass& cls, const SuiteOptions& opt = {});

/// Named suite lookup: one of ode, orthogonality, recurrence, ladder,
/// algebra, shift, casimir, coherent runs that suite; "all" runs every
/// suite, recording inapplicable ones (UnsupportedClass) as skipped notes
/// rather than failures.  Unknown names raise ParameterOutOfRange.
std::vector<Report> run_suites(const EquationClass& cls, const std::string& name,
                               const SuiteOptions& opt = {});

/// The suite names accepted by run_suites, in execution order.
const std::vector<std::string>& suite_names();

} // namespace hypoly
