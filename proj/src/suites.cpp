#include "hypoly/suites.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <sstream>

#include "hypoly/algebra.hpp"
#include "hypoly/coherent.hpp"
#include "hypoly/operators.hpp"
#include "hypoly/polyalg.hpp"
#include "hypoly/specfun.hpp"

namespace hypoly {

namespace {

double tol_of(const SuiteOptions& opt, double def) {
    return opt.tol_override.value_or(def);
}

int capped_lmax(const EquationClass& cls, int want) {
    int l = -1;
    while (l + 1 <= want && cls.cutoff().allows(l + 1)) ++l;
    return l;
}

Polynomial sigma_poly(const EquationClass& cls) {
    return Polynomial({cls.sig0, cls.sig1, cls.sig2});
}

Polynomial tau_poly(const EquationClass& cls) {
    return Polynomial({cls.beta, cls.alpha});
}

std::vector<double> sample_points(const EquationClass& cls) {
    double a = cls.interval.a.v;
    double b = cls.interval.b.v;
    if (cls.interval.a.is_finite() && cls.interval.b.is_finite()) {
        std::vector<double> out;
        for (double f : {0.12, 0.3, 0.5, 0.7, 0.88}) out.push_back(a + (b - a) * f);
        return out;
    }
    if (cls.interval.a.is_finite())
        return {a + 0.3, a + 1.0, a + 2.2, a + 4.5};
    return {-3.1, -1.2, 0.4, 1.7, 3.3};
}

// Residual of a polynomial identity sum(terms) = 0, relative to the largest
// term coefficient (floored at 1).
double relative_residual(const Polynomial& sum,
                         std::initializer_list<const Polynomial*> terms) {
    double den = 1.0;
    for (const Polynomial* t : terms) den = std::max(den, t->max_abs_coeff());
    return sum.max_abs_coeff() / den;
}

void merge_worst(Report& into, const Report& from) {
    for (const IdentityCheck& c : from.checks) {
        bool found = false;
        for (IdentityCheck& have : into.checks) {
            if (have.identity == c.identity) {
                have.max_residual = std::max(have.max_residual, c.max_residual);
                have.pass = have.max_residual <= have.tolerance;
                if (have.note.empty()) have.note = c.note;
                found = true;
                break;
            }
        }
        if (!found) into.checks.push_back(c);
    }
}

} // namespace

Report suite_ode(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep;
    rep.suite = "ode";
    int lmax = capped_lmax(cls, opt.l_max);
    Polynomial sg = sigma_poly(cls), tp = tau_poly(cls);

    double ode_res = 0.0, shape_res = 0.0, zero_res = 0.0;
    for (int l = 0; l <= lmax; ++l) {
        Polynomial p = build_psi(cls, l);
        Polynomial d1 = p.derivative();
        Polynomial t0 = sg * d1.derivative();
        Polynomial t1 = tp * d1;
        Polynomial t2 = cls.eigenvalue(l) * p;
        ode_res = std::max(ode_res,
                           relative_residual(t0 + t1 + t2, {&t0, &t1, &t2}));

        shape_res = std::max(shape_res, p.degree() == l ? 0.0 : 1.0);
        shape_res = std::max(shape_res, std::fabs(p.leading() - 1.0));

        std::vector<double> roots = real_roots(p, cls.interval);
        bool ok = static_cast<int>(roots.size()) == l;
        for (std::size_t i = 0; ok && i + 1 < roots.size(); ++i)
            ok = roots[i] < roots[i + 1];
        for (double r : roots)
            if (!cls.interval.contains(r)) ok = false;
        zero_res = std::max(zero_res, ok ? 0.0 : 1.0);
    }

    std::ostringstream note;
    note << "l = 0.." << lmax << " on " << cls.spec_string();
    rep.add("sigma Psi_l'' + tau Psi_l' + lambda_l Psi_l = 0", ode_res,
            tol_of(opt, 1e-8), note.str());
    rep.add("Psi_l is monic of degree l", shape_res, tol_of(opt, 1e-12));
    rep.add("Psi_l has l simple zeros in (a, b)", zero_res, tol_of(opt, 1e-8));
    return rep;
}

Report suite_orthogonality(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep;
    rep.suite = "orthogonality";
    int lmax = capped_lmax(cls, opt.l_max);

    std::vector<LadderRep> reps;
    std::vector<double> norms;
    for (int l = 0; l <= lmax; ++l) {
        reps.push_back(LadderRep{0, build_psi(cls, l)});
        norms.push_back(std::sqrt(
            inner_product(cls, reps.back(), reps.back(), opt.quad)));
    }

    double norm_res = 0.0;
    for (double n : norms)
        if (!(n > 0.0) || !std::isfinite(n)) norm_res = 1.0;

    double off_res = 0.0;
    for (int l = 1; l <= lmax; ++l)
        for (int k = 0; k < l; ++k) {
            double ip = inner_product(cls, reps[static_cast<std::size_t>(l)],
                                      reps[static_cast<std::size_t>(k)], opt.quad);
            off_res = std::max(off_res, std::fabs(ip) / (norms[static_cast<std::size_t>(l)] *
                                                         norms[static_cast<std::size_t>(k)]));
        }

    std::ostringstream note;
    note << "pairs 0 <= k < l <= " << lmax;
    rep.add("<Psi_l, Psi_k> = 0 for l != k", off_res, tol_of(opt, 1e-8), note.str());
    rep.add("0 < ||Psi_l|| < inf", norm_res, tol_of(opt, 1e-12));
    return rep;
}

Report suite_recurrence(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep;
    rep.suite = "recurrence";
    int lmax = capped_lmax(cls, opt.l_max);

    double rec_res = 0.0, g_res = 0.0;
    int used = -1;
    for (int l = 0; l + 1 <= lmax; ++l) {
        ThreeTerm tt = three_term_coefficients(cls, l);
        Polynomial pl = build_psi(cls, l);
        Polynomial s_pl = Polynomial::monomial(1) * pl;
        Polynomial sum = s_pl - build_psi(cls, l + 1) - tt.b * pl;
        if (l >= 1) sum -= tt.g * build_psi(cls, l - 1);
        rec_res = std::max(rec_res, relative_residual(sum, {&s_pl, &pl}));
        if (l >= 1) {
            LadderRep rl{0, pl}, rlm{0, build_psi(cls, l - 1)};
            double ratio = inner_product(cls, rl, rl, opt.quad) /
                           inner_product(cls, rlm, rlm, opt.quad);
            g_res = std::max(g_res, std::fabs(tt.g - ratio) / ratio);
            if (!(tt.g > 0.0)) g_res = std::max(g_res, 1.0);
        }
        used = l;
    }

    std::ostringstream note;
    note << "l = 0.." << used;
    if (used < 0) note.str("no degree admits the l+1 step below the cutoff");
    rep.add("s Psi_l = Psi_{l+1} + b_l Psi_l + g_l Psi_{l-1}", rec_res,
            tol_of(opt, 1e-8), note.str());
    rep.add("g_l = ||Psi_l||^2 / ||Psi_{l-1}||^2 > 0", g_res, tol_of(opt, 1e-8));
    return rep;
}

Report suite_ladder(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep;
    rep.suite = "ladder";
    int lmax = capped_lmax(cls, opt.l_max);
    Polynomial sg = sigma_poly(cls), tp = tau_poly(cls);
    std::vector<double> pts = sample_points(cls);

    double a_res = 0.0, ap_res = 0.0, h_res = 0.0, hp_res = 0.0;
    double chain_res = 0.0, mrec_res = 0.0;
    for (int l = 1; l <= lmax; ++l) {
        std::vector<LadderRep> psi;
        for (int m = 0; m <= l; ++m) psi.push_back(build_psi_lm(cls, l, m));
        double lam_l = cls.eigenvalue(l);

        for (int m = 0; m < l; ++m) {
            const auto mm = static_cast<std::size_t>(m);
            a_res = std::max(a_res,
                             coeff_distance(psi[mm].p.derivative(), psi[mm + 1].p));
            LadderRep back = apply_A_plus(cls, m, psi[mm + 1]);
            ap_res = std::max(
                ap_res, coeff_distance(back.p, (lam_l - cls.eigenvalue(m)) * psi[mm].p));
        }
        for (int m = 0; m <= l; ++m) {
            const auto mm = static_cast<std::size_t>(m);
            LadderRep hm = apply_H(cls, m, psi[mm]);
            h_res = std::max(h_res, coeff_distance(hm.p, lam_l * psi[mm].p));
            for (double s : pts) {
                double direct = apply_H_pointwise(cls, m, psi[mm], s);
                double expect = lam_l * eval_rep(cls, psi[mm], s);
                hp_res = std::max(hp_res, std::fabs(direct - expect) /
                                              std::max(1.0, std::fabs(expect)));
            }
        }
        chain_res = std::max(chain_res,
                             coeff_distance(ladder_chain(cls, l, 0).p, psi[0].p));

        for (int m = 1; m <= l; ++m) {
            const auto mm = static_cast<std::size_t>(m);
            Polynomial t0 = (m < l) ? sg * psi[mm + 1].p : Polynomial::zero();
            Polynomial t1 = (tp + (m - 1.0) * sg.derivative()) * psi[mm].p;
            Polynomial t2 = (lam_l - cls.eigenvalue(m - 1)) * psi[mm - 1].p;
            mrec_res = std::max(mrec_res,
                                relative_residual(t0 + t1 + t2, {&t0, &t1, &t2}));
        }
    }

    std::ostringstream note;
    note << "0 <= m <= l <= " << lmax;
    rep.add("A_m Psi_{l,m} = Psi_{l,m+1}", a_res, tol_of(opt, 1e-10), note.str());
    rep.add("A_m+ Psi_{l,m+1} = (lambda_l - lambda_m) Psi_{l,m}", ap_res,
            tol_of(opt, 1e-10));
    rep.add("(A_m+ A_m + lambda_m) Psi_{l,m} = lambda_l Psi_{l,m}", h_res,
            tol_of(opt, 1e-10));
    rep.add("H_m pointwise form matches the factorized action", hp_res,
            tol_of(opt, 1e-9));
    rep.add("lowering chain from Psi_{l,l} rebuilds Psi_{l,0}", chain_res,
            tol_of(opt, 1e-10));
    rep.add("sigma phi_{m+1} + (tau + (m-1) sigma') phi_m "
            "+ (lambda_l - lambda_{m-1}) phi_{m-1} = 0",
            mrec_res, tol_of(opt, 1e-10));
    merge_worst(rep, intertwining_check(cls, lmax, tol_of(opt, 1e-10)));

    double nl_res = 0.0;
    int nl_top = std::min(lmax, 8);
    for (int l = 1; l <= nl_top; ++l)
        for (int m = 1; m <= l; ++m) {
            double via_ladder = norm_via_ladder(cls, l, m);
            double via_quad = norm(cls, l, m, opt.quad);
            nl_res = std::max(nl_res, std::fabs(via_ladder - via_quad) / via_quad);
        }
    std::ostringstream nl_note;
    nl_note << "1 <= m <= l <= " << nl_top;
    rep.add("||Psi_{l,m}|| by sqrt(lambda_l - lambda_m) steps matches quadrature",
            nl_res, tol_of(opt, 1e-7), nl_note.str());
    return rep;
}

Report suite_algebra(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep = commutator_case_check(cls);
    if (opt.tol_override) {
        for (IdentityCheck& c : rep.checks) {
            c.tolerance = *opt.tol_override;
            c.pass = c.max_residual <= c.tolerance;
        }
    }

    int lmax = capped_lmax(cls, std::min(opt.l_max, 8));
    double me_res = 0.0, top_res = 0.0;
    bool any = false;
    for (int l = 1; l <= lmax; ++l) {
        for (int m = 0; m <= l; ++m) {
            double expect = std::sqrt(cls.eigenvalue(l) - cls.eigenvalue(m));
            double got = matrix_element_plus(cls, l, m, opt.quad);
            me_res = std::max(me_res, std::fabs(got - expect) / (1.0 + expect));
            if (m >= 1) {
                double expect_m =
                    std::sqrt(cls.eigenvalue(l) - cls.eigenvalue(m - 1));
                double got_m = matrix_element_minus(cls, l, m, opt.quad);
                me_res = std::max(me_res, std::fabs(got_m - expect_m) / (1.0 + expect_m));
            }
            any = true;
        }
        SurfaceRep top{l, Polynomial::constant(1.0), 1.0};
        top_res = std::max(top_res,
                           materialize(apply_L_plus(cls, top)).max_abs_coeff());
    }
    std::ostringstream note;
    note << (any ? "" : "no admissible l; ") << "0 <= m <= l <= "
         << std::max(lmax, 0);
    rep.add("L+- matrix elements are sqrt(lambda_l - lambda_m)", me_res,
            tol_of(opt, 1e-8), note.str());
    rep.add("L+ |l,l) = 0", top_res, tol_of(opt, 1e-12));

    if (cls.kind == SigmaKind::OneMinusS2 && cls.alpha == -2.0 && cls.beta == 0.0)
        merge_worst(rep, nilpotency_check(cls, std::min(opt.l_max, 6)));

    std::ostringstream ground;
    for (int l = 1; l <= std::min(lmax, 4); ++l) {
        if (l > 1) ground << ", ";
        ground << "l=" << l << ": " << to_string(classify_ground_lowering(cls, l));
    }
    rep.add("L- on the ground rep (informational)", 0.0, 1.0, ground.str());
    return rep;
}

Report suite_shift(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep = commutator_check(cls, 0, 16, tol_of(opt, 1e-10));
    merge_worst(rep, commutator_check(cls, 1, 16, tol_of(opt, 1e-10)));
    for (IdentityCheck& c : rep.checks) c.note = "m in {0, 1}, N = 16";
    return rep;
}

Report suite_casimir(const EquationClass& cls, const SuiteOptions& opt) {
    Report rep;
    rep.suite = "casimir";
    int lmax = capped_lmax(cls, std::min(opt.l_max, 6));
    if (lmax < 0) lmax = 0;
    for (int l = 0; l <= lmax; ++l)
        merge_worst(rep, casimir_check(cls, l, tol_of(opt, 1e-9)));
    std::ostringstream note;
    note << "l = 0.." << lmax << ", m = 0..l";
    for (IdentityCheck& c : rep.checks) c.note = note.str();
    return rep;
}

Report suite_coherent(const EquationClass& cls, const SuiteOptions& opt) {
    if (cls.kind != SigmaKind::One && cls.kind != SigmaKind::S &&
        cls.kind != SigmaKind::OneMinusS2)
        throw UnsupportedClass(
            "coherent states are defined for the one, s, and 1-s2 classes");
    Report rep;
    rep.suite = "coherent";

    const double two_pi = 6.283185307179586476925;
    double eig_res = 0.0;
    for (int m : {0, 1}) {
        eig_res = std::max(eig_res,
                           eigen_check(make_coherent(cls, m, {0.0, 0.0}, 80)));
        for (double r : {0.5, 1.0, 1.5, 2.0})
            for (int j = 0; j < 8; ++j) {
                std::complex<double> z = std::polar(r, two_pi * j / 8.0);
                eig_res = std::max(eig_res,
                                   eigen_check(make_coherent(cls, m, z, 80)));
            }
    }
    rep.add("a_m |z> = z |z>", eig_res, tol_of(opt, 1e-9),
            "m in {0, 1}, |z| <= 2 at 8 angles, N_trunc = 80");

    double norm_res = 0.0;
    for (int m : {0, 1, 2})
        for (double r : {0.0, 0.5, 1.0, 2.0}) {
            NormCheck nc = norm_check(make_coherent(cls, m, std::polar(r, 0.4), 80));
            norm_res = std::max(norm_res, std::fabs(nc.computed - nc.expected));
        }
    bool gaussian = (cls.kind != SigmaKind::OneMinusS2);
    rep.add(gaussian ? "<z|z> = 1" : "<z|z> = 0F1(2m - alpha; |z|^2)", norm_res,
            tol_of(opt, 1e-10), "m in {0, 1, 2}, |z| <= 2");

    double res_res = identity_resolution_check(cls, 0, 11, opt.quad);
    rep.add("integral dmu(z) |z><z| = 1", res_res, tol_of(opt, 1e-4),
            "diagonals n <= 10, m = 0");
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ode",     "orthogonality", "recurrence", "ladder",
        "algebra", "shift",         "casimir",    "coherent"};
    return names;
}

std::vector<Report> run_suites(const EquationClass& cls, const std::string& name,
                               const SuiteOptions& opt) {
    using SuiteFn = Report (*)(const EquationClass&, const SuiteOptions&);
    static const std::map<std::string, SuiteFn> table = {
        {"ode", suite_ode},           {"orthogonality", suite_orthogonality},
        {"recurrence", suite_recurrence}, {"ladder", suite_ladder},
        {"algebra", suite_algebra},   {"shift", suite_shift},
        {"casimir", suite_casimir},   {"coherent", suite_coherent}};

    std::vector<Report> out;
    if (name == "all") {
        for (const std::string& n : suite_names()) {
            try {
                out.push_back(table.at(n)(cls, opt));
            } catch (const UnsupportedClass& e) {
                Report skip;
                skip.suite = n;
                skip.add("skipped", 0.0, 0.0, e.what());
                out.push_back(std::move(skip));
            }
        }
        return out;
    }
    auto it = table.find(name);
    if (it == table.end())
        throw ParameterOutOfRange("unknown suite '" + name +
                                  "' (expected ode, orthogonality, recurrence, "
                                  "ladder, algebra, shift, casimir, coherent, all)");
    out.push_back(it->second(cls, opt));
    return out;
}

} // namespace hypoly
