#include "hypoly/algebra.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "hypoly/polyalg.hpp"
#include "hypoly/specfun.hpp"

namespace hypoly {

namespace {

Polynomial sigma_poly(const EquationClass& cls) {
    return Polynomial({cls.sig0, cls.sig1, cls.sig2});
}

Polynomial tau_poly(const EquationClass& cls) {
    return Polynomial({cls.beta, cls.alpha});
}

} // namespace

Polynomial materialize(const SurfaceRep& rep) { return rep.scale * rep.p; }

SurfaceRep apply_L_plus(const EquationClass& cls, const SurfaceRep& rep) {
    (void)cls;
    return SurfaceRep{rep.m + 1, rep.p.derivative(), rep.scale};
}

SurfaceRep apply_L_minus(const EquationClass& cls, const SurfaceRep& rep) {
    Polynomial out = -(sigma_poly(cls) * rep.p.derivative()) +
                     (1.0 - rep.m) * sigma_poly(cls).derivative() * rep.p -
                     tau_poly(cls) * rep.p;
    return SurfaceRep{rep.m - 1, std::move(out), rep.scale};
}

SurfaceRep apply_L0(const SurfaceRep& rep) {
    return SurfaceRep{rep.m, rep.p, rep.scale * rep.m};
}

double sigma_divisibility_residual(const EquationClass& cls, const SurfaceRep& rep) {
    if (rep.m >= 0 || rep.p.is_zero()) return 0.0;
    Polynomial sg = sigma_poly(cls);
    Polynomial cur = rep.p;
    double worst = 0.0;
    for (int i = 0; i < -rep.m; ++i) {
        if (cur.is_zero()) break;
        PolyDivision d = divide(cur, sg);
        worst = std::max(worst, d.remainder.max_abs_coeff() /
                                    std::max(1.0, cur.max_abs_coeff()));
        cur = d.quotient;
    }
    return worst;
}

SurfaceRep lowering_power(const EquationClass& cls, SurfaceRep rep, int count) {
    if (count < 0) throw IndexError("lowering_power requires count >= 0");
    for (int i = 0; i < count; ++i) {
        bool guard = rep.m <= 0;
        rep = apply_L_minus(cls, rep);
        if (guard) {
            double res = sigma_divisibility_residual(cls, rep);
            if (res > 1e-10) {
                std::ostringstream os;
                os << "lowering step to level " << rep.m << " of class "
                   << to_string(cls.kind)
                   << " left the polynomial ladder (sigma-divisibility residual "
                   << res << ")";
                throw DomainError(os.str());
            }
        }
    }
    return rep;
}

SurfaceRep canonical_rep(const EquationClass& cls, int l, int m,
                         const QuadratureSpec& spec) {
    int j = std::abs(m);
    if (j > l) throw IndexError("canonical_rep requires |m| <= l");
    LadderRep base = build_psi_lm(cls, l, j);
    double n = norm(cls, l, j, spec);
    Polynomial p = base.p * (1.0 / n);
    if (m < 0) {
        Polynomial sg = sigma_poly(cls);
        for (int i = 0; i < j; ++i) p = p * sg;
    }
    return SurfaceRep{m, std::move(p), 1.0};
}

const char* to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::HeisenbergWeyl: return "heisenberg-weyl";
        case AlgebraKind::SU2: return "su(2)";
        case AlgebraKind::SU11: return "su(1,1)";
    }
    return "?";
}

KNormalForm k_normal_form(const EquationClass& cls) {
    switch (cls.kind) {
        case SigmaKind::One:
        case SigmaKind::S: {
            double c = std::sqrt(-1.0 / cls.alpha);
            return {AlgebraKind::HeisenbergWeyl, c, -c, 0.0};
        }
        case SigmaKind::OneMinusS2:
            return {AlgebraKind::SU2, 1.0, 1.0, -(cls.alpha + 2.0) / 2.0};
        default:
            return {AlgebraKind::SU11, 1.0, 1.0, (cls.alpha - 2.0) / 2.0};
    }
}

namespace {

// q = c * target with c from the leading coefficients; ToleranceExceeded if
// the polynomials are not proportional to 1e-10 in coefficient distance.
double proportionality(const Polynomial& q, const Polynomial& target,
                       const char* who) {
    if (q.is_zero()) return 0.0;
    if (q.degree() != target.degree())
        throw ToleranceExceeded(std::string(who) +
                                ": image degree does not match the target");
    double c = q.leading() / target.leading();
    if (coeff_distance(q, c * target) > 1e-10)
        throw ToleranceExceeded(std::string(who) +
                                ": image is not proportional to the target");
    return c;
}

} // namespace

double matrix_element_plus(const EquationClass& cls, int l, int m,
                           const QuadratureSpec& spec) {
    if (m < 0 || m > l) throw IndexError("matrix_element_plus requires 0 <= m <= l");
    LadderRep from = build_psi_lm(cls, l, m);
    Polynomial image = from.p.derivative();
    if (m == l) {
        if (!image.is_zero())
            throw ToleranceExceeded("L_+ did not annihilate the top state");
        return 0.0;
    }
    Polynomial target = build_psi_lm(cls, l, m + 1).p;
    double c = proportionality(image, target, "matrix_element_plus");
    return c * norm(cls, l, m + 1, spec) / norm(cls, l, m, spec);
}

double matrix_element_minus(const EquationClass& cls, int l, int m,
                            const QuadratureSpec& spec) {
    if (m < 1 || m > l) throw IndexError("matrix_element_minus requires 1 <= m <= l");
    LadderRep from = build_psi_lm(cls, l, m);
    SurfaceRep image = apply_L_minus(cls, SurfaceRep{m, from.p, 1.0});
    Polynomial target = build_psi_lm(cls, l, m - 1).p;
    double c = proportionality(image.p, target, "matrix_element_minus");
    return c * norm(cls, l, m - 1, spec) / norm(cls, l, m, spec);
}

namespace {

using RepOp = std::function<SurfaceRep(const SurfaceRep&)>;

SurfaceRep rep_sub(const SurfaceRep& a, const SurfaceRep& b) {
    if (a.m != b.m) throw RepMismatch("subtracting reps at different levels");
    return SurfaceRep{a.m, materialize(a) - materialize(b), 1.0};
}

RepOp commutator(const RepOp& f, const RepOp& g) {
    return [f, g](const SurfaceRep& rep) { return rep_sub(f(g(rep)), g(f(rep))); };
}

} // namespace

Report commutator_case_check(const EquationClass& cls,
                             const std::vector<SurfaceRep>& samples) {
    Report rep;
    rep.suite = "algebra";
    KNormalForm kn = k_normal_form(cls);

    RepOp Lp = [&cls](const SurfaceRep& r) { return apply_L_plus(cls, r); };
    RepOp Lm = [&cls](const SurfaceRep& r) { return apply_L_minus(cls, r); };
    RepOp L0 = [](const SurfaceRep& r) { return apply_L0(r); };

    double case_res = 0.0, l0p_res = 0.0, l0m_res = 0.0;
    double k_res = 0.0, k0p_res = 0.0, k0m_res = 0.0, jac_res = 0.0;
    for (const SurfaceRep& s : samples) {
        if (s.is_zero()) continue;
        SurfaceRep comm = commutator(Lp, Lm)(s);
        double c = (kn.kind == AlgebraKind::HeisenbergWeyl) ? -cls.alpha
                   : (kn.kind == AlgebraKind::SU2)
                       ? 2.0 * (s.m + kn.k0_offset)
                       : -2.0 * (s.m + kn.k0_offset);
        case_res = std::max(case_res,
                            coeff_distance(materialize(comm), c * materialize(s)));

        SurfaceRep cp = commutator(L0, Lp)(s);
        l0p_res = std::max(l0p_res, coeff_distance(materialize(cp),
                                                   materialize(Lp(s))));
        SurfaceRep cm = commutator(L0, Lm)(s);
        l0m_res = std::max(l0m_res, coeff_distance(materialize(cm),
                                                   -1.0 * materialize(Lm(s))));

        double kf = kn.plus_scale * kn.minus_scale;
        Polynomial k_comm = kf * materialize(comm);
        Polynomial k_expect =
            (kn.kind == AlgebraKind::HeisenbergWeyl)
                ? -1.0 * materialize(s)
                : (kn.kind == AlgebraKind::SU2 ? 2.0 : -2.0) *
                      ((s.m + kn.k0_offset) * materialize(s));
        k_res = std::max(k_res, coeff_distance(k_comm, k_expect));

        k0p_res = std::max(k0p_res,
                           coeff_distance(kn.plus_scale * materialize(cp),
                                          kn.plus_scale * materialize(Lp(s))));
        k0m_res = std::max(k0m_res,
                           coeff_distance(kn.minus_scale * materialize(cm),
                                          -kn.minus_scale * materialize(Lm(s))));

        Polynomial jp = materialize(commutator(commutator(Lp, Lm), L0)(s));
        jp += materialize(commutator(commutator(Lm, L0), Lp)(s));
        jp += materialize(commutator(commutator(L0, Lp), Lm)(s));
        jac_res = std::max(jac_res, coeff_distance(jp, Polynomial::zero()));
    }

    const char* case_name =
        (kn.kind == AlgebraKind::HeisenbergWeyl) ? "[L+, L-] = -alpha"
        : (kn.kind == AlgebraKind::SU2) ? "[L+, L-] = 2(L0 - (alpha+2)/2)"
                                        : "[L+, L-] = -2(L0 + (alpha-2)/2)";
    const char* k_name = (kn.kind == AlgebraKind::HeisenbergWeyl)
                             ? "[K+, K-] = -1"
                         : (kn.kind == AlgebraKind::SU2) ? "[K+, K-] = 2 K0"
                                                         : "[K+, K-] = -2 K0";
    std::ostringstream note;
    note << samples.size() << " sample reps, " << to_string(kn.kind);
    rep.add(case_name, case_res, 1e-10, note.str());
    rep.add("[L0, L+] = L+", l0p_res, 1e-12);
    rep.add("[L0, L-] = -L-", l0m_res, 1e-12);
    rep.add(k_name, k_res, 1e-10);
    rep.add("[K0, K+] = K+", k0p_res, 1e-12);
    rep.add("[K0, K-] = -K-", k0m_res, 1e-12);
    rep.add("Jacobi identity on {L+, L-, L0}", jac_res, 1e-12);
    return rep;
}

Report commutator_case_check(const EquationClass& cls) {
    std::vector<SurfaceRep> samples;
    for (int l = 1; l <= 4 && cls.cutoff().allows(l); ++l)
        for (int m = 0; m <= l; ++m)
            samples.push_back(SurfaceRep{m, build_psi_lm(cls, l, m).p, 1.0});
    samples.push_back(SurfaceRep{0, Polynomial({1.0, 0.0, 1.0}), 1.0});
    samples.push_back(SurfaceRep{1, Polynomial({0.0, -2.0, 0.0, 1.0}), 1.0});
    samples.push_back(SurfaceRep{2, Polynomial({1.0, 1.0}), 0.5});
    samples.push_back(SurfaceRep{3, Polynomial({0.0, 0.0, 1.0}), 1.0});
    return commutator_case_check(cls, samples);
}

Report casimir_check(const EquationClass& cls, int l, double tol) {
    if (cls.kind == SigmaKind::One || cls.kind == SigmaKind::S)
        throw UnsupportedClass(
            "the Casimir check applies to the su(2) and su(1,1) classes only");
    if (!cls.cutoff().allows(l)) {
        std::ostringstream os;
        os << "degree " << l << " is not below the cutoff " << cls.cutoff().value.v;
        throw CutoffExceeded(os.str());
    }

    Report rep;
    rep.suite = "casimir";
    KNormalForm kn = k_normal_form(cls);
    bool su2 = (kn.kind == AlgebraKind::SU2);
    double phi = su2 ? l - cls.alpha / 2.0 - 1.0 : l + cls.alpha / 2.0 - 1.0;
    double eig = su2 ? phi * (phi + 1.0) : -phi * (phi + 1.0);

    double cas_res = 0.0, k0_res = 0.0, gap_res = 0.0;
    for (int m = 0; m <= l; ++m) {
        double nm = norm_via_ladder(cls, l, m);
        SurfaceRep base{m, build_psi_lm(cls, l, m).p * (1.0 / nm), 1.0};

        SurfaceRep kpkm = apply_L_minus(cls, apply_L_plus(cls, base));
        double k0 = m + kn.k0_offset;
        Polynomial c_rep = kn.plus_scale * kn.minus_scale * materialize(kpkm) +
                           (su2 ? 1.0 : -1.0) * (k0 * (k0 + 1.0)) * materialize(base);
        cas_res = std::max(cas_res, coeff_distance(c_rep, eig * materialize(base)));

        k0_res = std::max(k0_res, std::fabs(k0 - (phi + m - l)));

        double gap = cls.eigenvalue(l) - cls.eigenvalue(m);
        double closed = su2 ? (l - m) * (l + m - cls.alpha - 1.0)
                            : (m - l) * (m + l + cls.alpha - 1.0);
        gap_res = std::max(gap_res, std::fabs(gap - closed));
    }

    std::ostringstream note;
    note << "l = " << l << ", Phi = " << phi << ", m = 0.." << l;
    rep.add(su2 ? "C |l,m) = Phi(Phi+1) |l,m)" : "C |l,m) = -Phi(Phi+1) |l,m)",
            cas_res, tol, note.str());
    rep.add("K0 |l,m) = (Phi + m - l) |l,m)", k0_res, 1e-12);
    rep.add(su2 ? "lambda_l - lambda_m = (l-m)(l+m-alpha-1)"
                : "lambda_l - lambda_m = (m-l)(m+l+alpha-1)",
            gap_res, 1e-12 * (1.0 + std::fabs(cls.eigenvalue(l))));

    Polynomial top = apply_L_plus(cls, SurfaceRep{l, Polynomial::constant(1.0), 1.0}).p;
    rep.add("K+ |l,l) = 0", top.max_abs_coeff(), 0.0);
    return rep;
}

Report nilpotency_check(const EquationClass& cls, int l_max) {
    Report rep;
    rep.suite = "nilpotency";
    double nonzero_res = 0.0, zero_res = 0.0;
    for (int l = 0; l <= l_max; ++l) {
        SurfaceRep top{l, Polynomial::constant(1.0), 1.0};
        SurfaceRep floor = lowering_power(cls, top, 2 * l);
        double floor_mag = materialize(floor).max_abs_coeff();
        nonzero_res = std::max(nonzero_res, floor_mag > 0.0 ? 0.0 : 1.0);
        SurfaceRep beyond = lowering_power(cls, floor, 1);
        zero_res = std::max(zero_res, materialize(beyond).max_abs_coeff() /
                                          std::max(1.0, floor_mag));
    }
    std::ostringstream note;
    note << "l = 0.." << l_max;
    rep.add("(L-)^{2l} (l, 1) != 0", nonzero_res, 0.5, note.str());
    rep.add("(L-)^{2l+1} (l, 1) = 0", zero_res, 1e-12, note.str());
    return rep;
}

const char* to_string(GroundLowering g) {
    switch (g) {
        case GroundLowering::Zero: return "annihilated";
        case GroundLowering::Canonical: return "canonical image";
        case GroundLowering::InLadder: return "stays in the ladder";
        case GroundLowering::LeavesLadder: return "leaves the ladder";
    }
    return "?";
}

GroundLowering classify_ground_lowering(const EquationClass& cls, int l) {
    SurfaceRep out = apply_L_minus(cls, SurfaceRep{0, build_psi(cls, l), 1.0});
    if (out.p.is_zero()) return GroundLowering::Zero;
    if (sigma_divisibility_residual(cls, out) > 1e-10)
        return GroundLowering::LeavesLadder;
    if (l < 1) return GroundLowering::InLadder;
    Polynomial quotient = divide(out.p, sigma_poly(cls)).quotient;
    Polynomial target = build_psi_lm(cls, l, 1).p;
    if (quotient.degree() == target.degree()) {
        double c = quotient.leading() / target.leading();
        if (coeff_distance(quotient, c * target) <= 1e-10)
            return GroundLowering::Canonical;
    }
    return GroundLowering::InLadder;
}

} // namespace hypoly
