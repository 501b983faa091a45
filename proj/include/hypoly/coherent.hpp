#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hypoly/eqclass.hpp"
#include "hypoly/quad.hpp"

namespace hypoly {

/// Gamma function by the Lanczos rational approximation (g = 7, 9 terms),
/// with the reflection formula below 1/2.  Relative error stays under 1e-13
/// for arguments in (0, 200).  Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// 0F1(c; z) = sum_k z^k / ((c)_k k!), compensated summation, terms added
/// until |term| < 1e-16 |partial sum|.  Throws PoleError when c is a
/// nonpositive integer.
double hyp0f1(double c, double z);

/// Modified Bessel I_nu by the ascending series
/// sum_n (z/2)^{nu+2n} / (n! Gamma(nu+n+1)); z must be positive.
double bessel_I(double nu, double z);

/// Modified Bessel K_nu for z > 0.  For z <= 6 uses the reflection formula
/// K_nu = (pi/2)(I_{-nu} - I_nu)/sin(nu pi), taking the limit at integer
/// orders as the average over nu +- 1e-6; beyond z = 6 the reflection
/// difference cancels catastrophically in double precision, so K is computed
/// from the cosh integral K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt
/// by trapezoid refinement (the integrand is even and decays doubly
/// exponentially, so the trapezoid converges spectrally).
double bessel_K(double nu, double z);

/// Expansion |z> = sum_n c_n |n> over the normalized basis of the m-th
/// associated system, truncated to n < N_trunc.
///   sigma in {1, s}:  c_n = e^{|z|^2/(2 alpha)} z^n / sqrt(n! (-alpha)^n)
///   sigma = 1 - s^2:  c_n = sqrt(Gamma(cc)) z^n / sqrt(n! Gamma(n + cc)),
///                     cc = 2m - alpha
/// Coefficients are generated by the stable one-step recurrences these
/// formulas telescope into.
struct CoherentState {
    EquationClass cls;
    int m = 0;
    std::complex<double> z;
    int N_trunc = 0;
    std::vector<std::complex<double>> coeffs;
    double prefactor = 1.0;
};

/// Builds the truncated state; the first omitted coefficient must satisfy
/// |c_{N_trunc}| < 1e-14 max_n |c_n| or TruncationInsufficient is thrown.
/// UnsupportedClass for the s^2-1, s^2, s^2+1 classes.
CoherentState make_coherent(const EquationClass& cls, int m,
                            std::complex<double> z, int N_trunc);

/// max_n |(a_m c)_n - z c_n| over n < N_trunc - 1: how well the state is an
/// eigenvector of the lowering matrix.
double eigen_check(const CoherentState& state);

/// computed = sum |c_n|^2; expected = 1 (sigma in {1, s}) or
/// 0F1(2m - alpha; |z|^2) (sigma = 1 - s^2).
struct NormCheck {
    double computed;
    double expected;
};
NormCheck norm_check(const CoherentState& state);

/// Theta-folded radial density g(r) of the resolving measure
/// dmu = g(r)/(2 pi) dr dtheta, fixed by the moment conditions
/// int_0^inf g(r) |c_n(r)|^2 dr = 1 for every n:
///   sigma in {1, s}:  g(r) = 2 r / (-alpha)
///   sigma = 1 - s^2:  g(r) = (4 / Gamma(cc)) r^{cc} K_{cc-1}(2r)
/// (the second reproduces n! Gamma(n+cc) as its 2n-th moments).
struct RadialMeasure {
    EquationClass cls;
    int m = 0;
    std::function<double(double)> density;
};
RadialMeasure radial_measure(const EquationClass& cls, int m);

/// Diagonal entries M_nn = int_0^inf g(r) |c_n(r)|^2 dr for n < N_basis
/// (off-diagonals vanish by angular orthogonality).  The radial integral
/// runs to the first integer r past the integrand peak where the integrand
/// drops below 1e-18, capped at r = 50.
std::vector<double> resolution_diagonals(const EquationClass& cls, int m,
                                         int N_basis,
                                         const QuadratureSpec& spec = {});

/// max_n |M_nn - 1| over n < N_basis.
double identity_resolution_check(const EquationClass& cls, int m, int N_basis,
                                 const QuadratureSpec& spec = {});

} // namespace hypoly
