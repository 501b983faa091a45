#pragma once

#include <vector>

#include "hypoly/eqclass.hpp"
#include "hypoly/polynomial.hpp"
#include "hypoly/quad.hpp"
#include "hypoly/report.hpp"

namespace hypoly {

/// A function scale * e^{i m phi} kappa(s)^m p(s) on the cylinder
/// (a, b) x [0, 2pi), with m any integer.  Negative kappa powers are
/// meaningful only when p carries enough sigma factors (kappa^2 = sigma);
/// lowering_power() verifies that, the raw operator applications below do not.
struct SurfaceRep {
    int m = 0;
    Polynomial p;
    double scale = 1.0;

    bool is_zero() const { return scale == 0.0 || p.is_zero(); }
};

/// scale * p as a plain polynomial (the s-dependent factor at fixed level m).
Polynomial materialize(const SurfaceRep& rep);

/// L_+ = e^{i phi} (kappa d/ds + i kappa' d/dphi): (m, p) -> (m+1, p').
SurfaceRep apply_L_plus(const EquationClass& cls, const SurfaceRep& rep);

/// L_- = e^{-i phi} (-kappa d/ds + i kappa' d/dphi - tau/kappa + 2 kappa'):
/// (m, p) -> (m-1, -sigma p' + (1-m) sigma' p - tau p), valid for every
/// integer m as an identity of stored pairs.
SurfaceRep apply_L_minus(const EquationClass& cls, const SurfaceRep& rep);

/// L_0 = -i d/dphi: multiplies the rep by its level m.
SurfaceRep apply_L0(const SurfaceRep& rep);

/// How far rep.p is from being divisible by sigma^{|m|} when m < 0: the
/// largest remainder coefficient across the repeated divisions, relative to
/// the coefficient scale of p.  Zero for m >= 0 or a zero rep.
double sigma_divisibility_residual(const EquationClass& cls, const SurfaceRep& rep);

/// Applies L_- `count` times.  Every step entered at level m <= 0 must keep
/// the result divisible by the accumulated sigma power (residual <= 1e-10);
/// a violation means the function has left the polynomial ladder and raises
/// DomainError.
SurfaceRep lowering_power(const EquationClass& cls, SurfaceRep rep, int count);

/// Normalized |l, m) for -l <= m <= l: e^{i m phi} Psi_{l,|m|} / ||Psi_{l,|m|}||,
/// stored as (m, sigma^{|m|} phi_{l,|m|} / N) when m < 0.
SurfaceRep canonical_rep(const EquationClass& cls, int l, int m,
                         const QuadratureSpec& spec = {});

enum class AlgebraKind { HeisenbergWeyl, SU2, SU11 };
const char* to_string(AlgebraKind kind);

/// Affine recombination turning {L_+, L_-, L_0} into the standard generators:
///   K_+ = plus_scale L_+,  K_- = minus_scale L_-,  K_0 = L_0 + k0_offset.
/// HeisenbergWeyl: plus = sqrt(-1/alpha), minus = -sqrt(-1/alpha), offset 0,
///   [K_+, K_-] = -1.
/// SU2 (sigma = 1-s^2): scales 1, offset -(alpha+2)/2, [K_+, K_-] = 2 K_0.
/// SU11 (sigma'' = 2):  scales 1, offset  (alpha-2)/2, [K_+, K_-] = -2 K_0.
struct KNormalForm {
    AlgebraKind kind = AlgebraKind::HeisenbergWeyl;
    double plus_scale = 1.0;
    double minus_scale = 1.0;
    double k0_offset = 0.0;
};
KNormalForm k_normal_form(const EquationClass& cls);

/// <l,m+1|L_+|l,m> on normalized reps.  The image polynomial must be exactly
/// proportional to the target basis polynomial (coefficient distance
/// <= 1e-10), else ToleranceExceeded; the returned value is the
/// proportionality constant times the quadrature norm ratio.  Equals
/// sqrt(lambda_l - lambda_m); zero at m = l.
double matrix_element_plus(const EquationClass& cls, int l, int m,
                           const QuadratureSpec& spec = {});

/// <l,m-1|L_-|l,m> for 1 <= m <= l, equal to sqrt(lambda_l - lambda_{m-1}).
double matrix_element_minus(const EquationClass& cls, int l, int m,
                            const QuadratureSpec& spec = {});

/// Verifies, on the given reps, the commutation relations
///   [L_0, L_+] = L_+,  [L_0, L_-] = -L_-,
///   [L_+, L_-] = -alpha          (sigma'' = 0)
///              = 2(L_0 - (alpha+2)/2)   (sigma = 1-s^2)
///              = -2(L_0 + (alpha-2)/2)  (sigma'' = 2)
/// and the K-form brackets [K_+, K_-] = -1 / 2 K_0 / -2 K_0 and
/// [K_0, K_+-] = +-K_+-.  All residuals are coefficient distances.
Report commutator_case_check(const EquationClass& cls,
                             const std::vector<SurfaceRep>& samples);
/// Same, on a default grid of canonical reps (0 <= m <= l <= 4, l < Lambda)
/// plus a few non-canonical probes.
Report commutator_case_check(const EquationClass& cls);

/// Casimir spectrum on |l, m) for m = 0..l.  SU2: C = K_-K_+ + K_0(K_0+1)
/// with eigenvalue Phi(Phi+1), Phi = l - alpha/2 - 1.  SU11:
/// C = K_-K_+ - K_0(K_0+1) with eigenvalue -Phi(Phi+1), Phi = l + alpha/2 - 1.
/// Also checks the factored gap lambda_l - lambda_m = (l-m)(l+m-alpha-1)
/// (SU2) or (m-l)(m+l+alpha-1) (SU11) and the K_0 eigenvalue Phi + m - l.
/// Throws UnsupportedClass for the Heisenberg-Weyl classes, CutoffExceeded
/// when l >= Lambda.
Report casimir_check(const EquationClass& cls, int l, double tol = 1e-9);

/// Finite-string property of the tau = sigma' equation (alpha = -2, beta = 0
/// on 1-s^2): starting from the top rep (l, const), (L_-)^{2l} is nonzero and
/// (L_-)^{2l+1} vanishes identically, for l = 0..l_max.
Report nilpotency_check(const EquationClass& cls, int l_max);

/// What L_- does to the ground rep (0, Psi_l): annihilates it, lands exactly
/// on the canonical rep of e^{-i phi} Psi_{l,1} (up to scale), stays inside
/// the polynomial ladder otherwise, or leaves it (p not divisible by sigma).
enum class GroundLowering { Zero, Canonical, InLadder, LeavesLadder };
const char* to_string(GroundLowering g);
GroundLowering classify_ground_lowering(const EquationClass& cls, int l);

} // namespace hypoly
