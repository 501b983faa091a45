#include "hypoly/operators.hpp"

#include <cmath>
#include <sstream>

#include "hypoly/polyalg.hpp"

namespace hypoly {

namespace {

void require_level(const LadderRep& rep, int expected, const char* who) {
    if (rep.m != expected) {
        std::ostringstream os;
        os << who << " expects a representation at kappa level " << expected
           << ", got " << rep.m;
        throw RepMismatch(os.str());
    }
}

Polynomial sigma_poly(const EquationClass& cls) {
    return Polynomial({cls.sig0, cls.sig1, cls.sig2});
}

Polynomial tau_poly(const EquationClass& cls) {
    return Polynomial({cls.beta, cls.alpha});
}

// d/ds [kappa^m p] = kappa^(m-2) [sigma p' + (m/2) sigma' p].
LadderRep rep_derivative(const EquationClass& cls, const LadderRep& rep) {
    Polynomial q = sigma_poly(cls) * rep.p.derivative() +
                   (0.5 * rep.m) * sigma_poly(cls).derivative() * rep.p;
    return LadderRep{rep.m - 2, std::move(q)};
}

} // namespace

LadderRep apply_A(const EquationClass& cls, int m, const LadderRep& rep) {
    (void)cls;
    require_level(rep, m, "apply_A");
    return LadderRep{m + 1, rep.p.derivative()};
}

LadderRep apply_A_plus(const EquationClass& cls, int m, const LadderRep& rep) {
    require_level(rep, m + 1, "apply_A_plus");
    const Polynomial& q = rep.p;
    Polynomial out = -(sigma_poly(cls) * q.derivative()) -
                     static_cast<double>(m) * sigma_poly(cls).derivative() * q -
                     tau_poly(cls) * q;
    return LadderRep{m, std::move(out)};
}

LadderRep apply_H(const EquationClass& cls, int m, const LadderRep& rep) {
    require_level(rep, m, "apply_H");
    LadderRep out = apply_A_plus(cls, m, apply_A(cls, m, rep));
    out.p += cls.eigenvalue(m) * rep.p;
    return out;
}

double apply_H_pointwise(const EquationClass& cls, int m, const LadderRep& rep,
                         double s) {
    require_level(rep, m, "apply_H_pointwise");
    double sg = cls.sigma(s);
    if (std::fabs(sg) <= 1e-3)
        throw DomainError("apply_H_pointwise needs |sigma(s)| > 1e-3");
    LadderRep d1 = rep_derivative(cls, rep);
    LadderRep d2 = rep_derivative(cls, d1);
    double sp = cls.sigma_prime(s);
    double dm = static_cast<double>(m);
    double potential = dm * (dm - 2.0) / 4.0 * sp * sp / sg +
                       dm * cls.tau(s) * sp / (2.0 * sg) -
                       dm * (dm - 2.0) * cls.sigma_dd() / 2.0 - dm * cls.alpha;
    return -sg * eval_rep(cls, d2, s) - cls.tau(s) * eval_rep(cls, d1, s) +
           potential * eval_rep(cls, rep, s);
}

LadderRep ladder_chain(const EquationClass& cls, int l, int m) {
    if (m < 0 || m > l) throw IndexError("ladder_chain requires 0 <= m <= l");
    LadderRep rep = build_psi_lm(cls, l, l);
    for (int j = l - 1; j >= m; --j) {
        rep = apply_A_plus(cls, j, rep);
        rep.p *= 1.0 / (cls.eigenvalue(l) - cls.eigenvalue(j));
    }
    return rep;
}

ShiftMatrices shift_matrices(const EquationClass& cls, int m, int N) {
    if (cls.kind != SigmaKind::One && cls.kind != SigmaKind::S &&
        cls.kind != SigmaKind::OneMinusS2) {
        throw UnsupportedClass(
            "shift matrices need an unbounded degree ladder; class " +
            std::string(to_string(cls.kind)) + " has a finite cutoff");
    }
    if (m < 0) throw IndexError("shift_matrices requires m >= 0");
    if (N < 2) throw ParameterOutOfRange("shift_matrices requires N >= 2");

    auto e = [&](int n) { return cls.eigenvalue(m + n) - cls.eigenvalue(m); };

    OperatorMatrix lower{cls, m, N, OpKind::Lower, Eigen::MatrixXd::Zero(N, N)};
    for (int n = 1; n < N; ++n) lower.entries(n, n - 1) = std::sqrt(e(n));

    OperatorMatrix raise{cls, m, N, OpKind::Raise, lower.entries.transpose()};

    OperatorMatrix shift{cls, m, N, OpKind::Shift, Eigen::MatrixXd::Identity(N, N)};

    OperatorMatrix number{cls, m, N, OpKind::Number, Eigen::MatrixXd::Zero(N, N)};
    for (int n = 0; n < N; ++n)
        number.entries(n, n) =
            (-cls.sigma_dd() * static_cast<double>(m + n) - cls.alpha) / 2.0;

    OperatorMatrix ham{cls, m, N, OpKind::Hamiltonian, Eigen::MatrixXd::Zero(N, N)};
    for (int n = 0; n < N; ++n) ham.entries(n, n) = e(n);

    return {std::move(lower), std::move(raise), std::move(shift),
            std::move(number), std::move(ham)};
}

Eigen::VectorXd apply(const OperatorMatrix& op, const Eigen::VectorXd& coeffs) {
    return op.entries.transpose() * coeffs;
}

Eigen::VectorXcd apply(const OperatorMatrix& op, const Eigen::VectorXcd& coeffs) {
    return op.entries.transpose() * coeffs;
}

Eigen::MatrixXd op_compose(const OperatorMatrix& a, const OperatorMatrix& b) {
    // Row-input convention: "first a, then b" multiplies on the right.
    return a.entries * b.entries;
}

Eigen::MatrixXd op_commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    // [A, B] = A o B - B o A where A o B applies B first.
    return b.entries * a.entries - a.entries * b.entries;
}

namespace {

double interior_max_abs(const Eigen::MatrixXd& m) {
    int n = static_cast<int>(m.rows()) - 1;
    if (n <= 0) return 0.0;
    return m.topLeftCorner(n, n).cwiseAbs().maxCoeff();
}

} // namespace

Report commutator_check(const EquationClass& cls, int m, int N, double tol) {
    ShiftMatrices sm = shift_matrices(cls, m, N);
    Report rep;
    rep.suite = "shift";

    Eigen::MatrixXd lam_gap = Eigen::MatrixXd::Zero(N, N);
    for (int n = 0; n < N; ++n)
        lam_gap(n, n) = cls.eigenvalue(m + n + 1) - cls.eigenvalue(m + n);
    rep.add("[a_m, a_m+] = diag(lambda_{m+n+1} - lambda_{m+n})",
            interior_max_abs(op_commutator(sm.lower, sm.raise) - lam_gap), tol);

    rep.add("[a_m+, a_m] = -2 R_m",
            interior_max_abs(op_commutator(sm.raise, sm.lower) +
                             2.0 * sm.number.entries),
            tol);

    rep.add("[R_m, a_m+] = -(sigma''/2) a_m+",
            interior_max_abs(op_commutator(sm.number, sm.raise) +
                             0.5 * cls.sigma_dd() * sm.raise.entries),
            tol);

    rep.add("[R_m, a_m] = (sigma''/2) a_m",
            interior_max_abs(op_commutator(sm.number, sm.lower) -
                             0.5 * cls.sigma_dd() * sm.lower.entries),
            tol);

    // a_m+ a_m (apply a_m first) must reproduce the diagonal of H_m - lambda_m.
    rep.add("a_m+ a_m = H_m - lambda_m",
            interior_max_abs(op_compose(sm.lower, sm.raise) - sm.ham.entries), tol);

    double en_gap = 0.0;
    for (int n = 0; n < N; ++n) {
        double dn = static_cast<double>(n);
        double closed = (cls.kind == SigmaKind::OneMinusS2)
                            ? dn * (dn + 2.0 * m - cls.alpha - 1.0)
                            : -cls.alpha * dn;
        en_gap = std::max(en_gap, std::fabs(sm.ham.entries(n, n) - closed));
    }
    rep.add(cls.kind == SigmaKind::OneMinusS2 ? "e_n = n(n + 2m - alpha - 1)"
                                              : "e_n = -alpha n",
            en_gap, 1e-12 * (1.0 + std::fabs(cls.eigenvalue(m + N))));

    if (cls.kind == SigmaKind::One || cls.kind == SigmaKind::S) {
        double c = std::sqrt(-1.0 / cls.alpha);
        OperatorMatrix pp = sm.raise, pm = sm.lower;
        pp.entries *= c;
        pm.entries *= c;
        rep.add("[P_+, P_-] = -1",
                interior_max_abs(op_commutator(pp, pm) +
                                 Eigen::MatrixXd::Identity(N, N)),
                tol);
    } else {
        rep.add("[K_+, K_-] = -2 K_0",
                interior_max_abs(op_commutator(sm.raise, sm.lower) +
                                 2.0 * sm.number.entries),
                tol);
        rep.add("[K_0, K_+] = K_+",
                interior_max_abs(op_commutator(sm.number, sm.raise) -
                                 sm.raise.entries),
                tol);
        rep.add("[K_0, K_-] = -K_-",
                interior_max_abs(op_commutator(sm.number, sm.lower) +
                                 sm.lower.entries),
                tol);
        double cas = -(cls.alpha / 2.0 - m) * (cls.alpha / 2.0 - m + 1.0);
        Eigen::MatrixXd cmat = op_compose(sm.raise, sm.lower) -
                               sm.number.entries * (sm.number.entries +
                                                    Eigen::MatrixXd::Identity(N, N)) -
                               cas * Eigen::MatrixXd::Identity(N, N);
        rep.add("K_- K_+ - K_0(K_0+1) = -(alpha/2 - m)(alpha/2 - m + 1)",
                interior_max_abs(cmat), tol);
    }
    return rep;
}

Report intertwining_check(const EquationClass& cls, int l_max, double tol) {
    Report rep;
    rep.suite = "ladder";
    double worst1 = 0.0, worst2 = 0.0;
    int pairs = 0;
    for (int l = 1; l <= l_max && cls.cutoff().allows(l); ++l) {
        for (int m = 0; m < l; ++m) {
            LadderRep top = build_psi_lm(cls, l, m + 1);
            LadderRep lhs1 = apply_H(cls, m, apply_A_plus(cls, m, top));
            LadderRep rhs1 = apply_A_plus(cls, m, apply_H(cls, m + 1, top));
            worst1 = std::max(worst1, coeff_distance(lhs1.p, rhs1.p));

            LadderRep base = build_psi_lm(cls, l, m);
            LadderRep lhs2 = apply_A(cls, m, apply_H(cls, m, base));
            LadderRep rhs2 = apply_H(cls, m + 1, apply_A(cls, m, base));
            worst2 = std::max(worst2, coeff_distance(lhs2.p, rhs2.p));
            ++pairs;
        }
    }
    std::ostringstream note;
    note << pairs << " (l, m) pairs, l <= " << l_max;
    rep.add("H_m A_m+ = A_m+ H_{m+1}", worst1, tol, note.str());
    rep.add("A_m H_m = H_{m+1} A_m", worst2, tol, note.str());
    return rep;
}

} // namespace hypoly
