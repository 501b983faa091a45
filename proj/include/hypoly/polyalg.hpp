#pragma once

#include <vector>

#include "hypoly/eqclass.hpp"
#include "hypoly/polynomial.hpp"

namespace hypoly {

/// Largest polynomial degree the builders accept; keeps double-precision
/// coefficient arithmetic well conditioned.
inline constexpr int kMaxDegree = 60;

/// Monic degree-l polynomial solution of
///   sigma y'' + tau y' + eigenvalue(l) y = 0
/// obtained by the downward coefficient recurrence
///   [sig2 k(k-1) + alpha k + lambda_l] c_k
///     + [sig1 k(k+1) + beta (k+1)] c_{k+1}
///     + sig0 (k+2)(k+1) c_{k+2} = 0,   c_l = 1.
/// Throws CutoffExceeded unless l < Lambda, DegenerateRecurrence if a
/// divisor lambda_l - lambda_k vanishes.
Polynomial build_psi(const EquationClass& cls, int l);

/// Same recurrence without the square-integrability gate: returns the monic
/// degree-`degree` ODE solution whenever the recurrence is nondegenerate,
/// even for degrees at or past the cutoff (where the solution exists but is
/// not square integrable).
Polynomial ode_solution_unchecked(const EquationClass& cls, int degree);

/// Independent construction of the same polynomial from the weight:
/// proportional to (1/rho) d^l/ds^l [sigma^l rho], carried out symbolically
/// via rho'/rho = (tau - sigma')/sigma, then rescaled monic.
Polynomial rodrigues_oracle(const EquationClass& cls, int l);

/// Second independent construction from classical families:
///   one:   H_l(sqrt(-alpha/2) s - beta/sqrt(-2 alpha))
///   s:     L_l^(beta-1)(-alpha s)
///   1-s2:  P_l^(-(alpha+beta)/2-1, (-alpha+beta)/2-1)(s)
///   s2-1:  P_l^((alpha-beta)/2-1, (alpha+beta)/2-1)(-s)
///   s2:    (s/beta)^l L_l^(1-alpha-2l)(beta/s)
/// rescaled monic.  Throws OracleUnavailable for s2+1 (the closed form
/// needs complex Jacobi indices).
Polynomial classical_oracle(const EquationClass& cls, int l);

/// Classical families as explicit coefficient sums (conventional
/// normalizations, not monic).
Polynomial hermite_polynomial(int l);
Polynomial laguerre_polynomial(int l, double p);
Polynomial jacobi_polynomial(int l, double p, double q);

/// All real roots of p inside (a, b), ascending.  Brackets are located by
/// recursive interlacing with the derivative's roots and refined by
/// bisection to 1e-12 in s.
std::vector<double> real_roots(const Polynomial& p, const Interval& iv);

/// Monic three-term recurrence s Psi_l = Psi_{l+1} + b_l Psi_l + g_l Psi_{l-1};
/// coefficients from weighted inner products (quadrature).
struct ThreeTerm {
    double b;
    double g; // 0 for l = 0
};
ThreeTerm three_term_coefficients(const EquationClass& cls, int l);

} // namespace hypoly
