#include "hypoly/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypoly/quad.hpp"
#include "hypoly/specfun.hpp"

namespace hypoly {

namespace {

// C(a, j) for real a, integer j >= 0, as the finite product
// a (a-1) ... (a-j+1) / j!.
double real_binomial(double a, int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= (a - static_cast<double>(j - i)) / i;
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

void check_degree(int l, const char* who) {
    if (l < 0) {
        std::ostringstream os;
        os << who << " requires l >= 0, got " << l;
        throw IndexError(os.str());
    }
    if (l > kMaxDegree) {
        std::ostringstream os;
        os << who << " caps the degree at " << kMaxDegree << ", got " << l;
        throw ParameterOutOfRange(os.str());
    }
}

} // namespace

Polynomial ode_solution_unchecked(const EquationClass& cls, int degree) {
    check_degree(degree, "ode_solution_unchecked");
    int l = degree;
    double lam = cls.eigenvalue(l);
    std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
    c[static_cast<std::size_t>(l)] = 1.0;
    for (int k = l - 1; k >= 0; --k) {
        double dk = static_cast<double>(k);
        // coefficient of c_k is lambda_l - lambda_k
        double div = cls.sig2 * dk * (dk - 1.0) + cls.alpha * dk + lam;
        double rhs = (cls.sig1 * dk * (dk + 1.0) + cls.beta * (dk + 1.0)) *
                     c[static_cast<std::size_t>(k + 1)];
        if (k + 2 <= l)
            rhs += cls.sig0 * (dk + 2.0) * (dk + 1.0) * c[static_cast<std::size_t>(k + 2)];
        if (std::fabs(div) <= 1e-9 * (1.0 + std::fabs(lam))) {
            std::ostringstream os;
            os << "vanishing divisor lambda_" << l << " - lambda_" << k
               << " in the downward recurrence for " << cls.spec_string();
            throw DegenerateRecurrence(os.str());
        }
        c[static_cast<std::size_t>(k)] = -rhs / div;
    }
    return Polynomial(std::move(c));
}

Polynomial build_psi(const EquationClass& cls, int l) {
    check_degree(l, "build_psi");
    if (!cls.cutoff().allows(l)) {
        std::ostringstream os;
        os << "degree l = " << l << " is not below the cutoff Lambda = "
           << cls.cutoff().value.v << " for " << cls.spec_string();
        throw CutoffExceeded(os.str());
    }
    return ode_solution_unchecked(cls, l);
}

Polynomial rodrigues_oracle(const EquationClass& cls, int l) {
    check_degree(l, "rodrigues_oracle");
    if (!cls.cutoff().allows(l)) {
        std::ostringstream os;
        os << "degree l = " << l << " is not below the cutoff for " << cls.spec_string();
        throw CutoffExceeded(os.str());
    }
    // Track Q with the invariant f = Q sigma^j rho.  Differentiating once:
    //   f' = [Q' sigma + Q (tau + (j-1) sigma')] sigma^(j-1) rho,
    // using (sigma rho)' = tau rho.  l steps take (1, l) to (Q_final, 0).
    Polynomial sigma({cls.sig0, cls.sig1, cls.sig2});
    Polynomial sigma_p = sigma.derivative();
    Polynomial tau({cls.beta, cls.alpha});
    Polynomial q = Polynomial::constant(1.0);
    for (int j = l; j >= 1; --j) {
        q = q.derivative() * sigma + q * (tau + (static_cast<double>(j) - 1.0) * sigma_p);
    }
    if (q.degree() != l)
        throw DegenerateRecurrence("weight-derivative construction degenerated");
    return q.monic();
}

Polynomial hermite_polynomial(int l) {
    check_degree(l, "hermite_polynomial");
    std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
    double lf = factorial(l);
    for (int k = 0; 2 * k <= l; ++k) {
        int d = l - 2 * k;
        double v = lf * std::pow(2.0, d) / (factorial(k) * factorial(d));
        if (k % 2 != 0) v = -v;
        c[static_cast<std::size_t>(d)] = v;
    }
    return Polynomial(std::move(c));
}

Polynomial laguerre_polynomial(int l, double p) {
    check_degree(l, "laguerre_polynomial");
    std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
    for (int k = 0; k <= l; ++k) {
        double v = real_binomial(static_cast<double>(l) + p, l - k) / factorial(k);
        if (k % 2 != 0) v = -v;
        c[static_cast<std::size_t>(k)] = v;
    }
    return Polynomial(std::move(c));
}

Polynomial jacobi_polynomial(int l, double p, double q) {
    check_degree(l, "jacobi_polynomial");
    Polynomial xm1({-1.0, 1.0});
    Polynomial xp1({1.0, 1.0});
    Polynomial sum;
    for (int k = 0; k <= l; ++k) {
        double w = real_binomial(static_cast<double>(l) + p, k) *
                   real_binomial(static_cast<double>(l) + q, l - k);
        if (w == 0.0) continue;
        Polynomial term = Polynomial::constant(w);
        for (int i = 0; i < l - k; ++i) term = term * xm1;
        for (int i = 0; i < k; ++i) term = term * xp1;
        sum += term;
    }
    return sum * std::pow(0.5, l);
}

Polynomial classical_oracle(const EquationClass& cls, int l) {
    check_degree(l, "classical_oracle");
    if (!cls.cutoff().allows(l)) {
        std::ostringstream os;
        os << "degree l = " << l << " is not below the cutoff for " << cls.spec_string();
        throw CutoffExceeded(os.str());
    }
    double a = cls.alpha, b = cls.beta;
    Polynomial raw;
    switch (cls.kind) {
        case SigmaKind::One:
            raw = compose_affine(hermite_polynomial(l), std::sqrt(-a / 2.0),
                                 -b / std::sqrt(-2.0 * a));
            break;
        case SigmaKind::S:
            raw = compose_affine(laguerre_polynomial(l, b - 1.0), -a, 0.0);
            break;
        case SigmaKind::OneMinusS2:
            raw = jacobi_polynomial(l, -(a + b) / 2.0 - 1.0, (-a + b) / 2.0 - 1.0);
            break;
        case SigmaKind::S2MinusOne:
            raw = compose_affine(
                jacobi_polynomial(l, (a - b) / 2.0 - 1.0, (a + b) / 2.0 - 1.0), -1.0,
                0.0);
            break;
        case SigmaKind::S2: {
            // (s/b)^l L_l^(1-a-2l)(b/s): coefficient of s^(l-k) is
            // (-1)^k C(l+p, l-k) b^(k-l) / k! with p = 1 - a - 2l.
            double p = 1.0 - a - 2.0 * l;
            std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
            for (int k = 0; k <= l; ++k) {
                double v = real_binomial(static_cast<double>(l) + p, l - k) *
                           std::pow(b, static_cast<double>(k - l)) / factorial(k);
                if (k % 2 != 0) v = -v;
                c[static_cast<std::size_t>(l - k)] = v;
            }
            raw = Polynomial(std::move(c));
            break;
        }
        case SigmaKind::S2PlusOne:
            throw OracleUnavailable(
                "no real classical closed form for class s2+1 (its Jacobi "
                "indices are complex)");
    }
    if (raw.degree() != l || raw.leading() == 0.0)
        throw OracleUnavailable("classical closed form degenerated at this parameter set");
    return raw.monic();
}

namespace {

// Roots of p restricted to the window [lo, hi], by interlacing: the roots of
// p' split [lo, hi] into monotone pieces, each holding at most one sign
// change of p.
void roots_in_window(const Polynomial& p, double lo, double hi,
                     std::vector<double>& out) {
    int d = p.degree();
    if (d <= 0 || lo >= hi) return;
    if (d == 1) {
        double r = -p.coeff(0) / p.coeff(1);
        if (r > lo && r < hi) out.push_back(r);
        return;
    }
    std::vector<double> stat;
    roots_in_window(p.derivative(), lo, hi, stat);
    std::vector<double> brk;
    brk.push_back(lo);
    for (double s : stat) brk.push_back(s);
    brk.push_back(hi);
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        double x0 = brk[i], x1 = brk[i + 1];
        double f0 = p.eval(x0), f1 = p.eval(x1);
        // A root sitting exactly on a stationary point is recorded once, as
        // the right endpoint of the piece ending there.
        if (f1 == 0.0 && i + 2 < brk.size()) out.push_back(x1);
        if (f0 == 0.0 || f1 == 0.0) continue;
        if ((f0 > 0.0) == (f1 > 0.0)) continue;
        while (x1 - x0 > 1e-12) {
            double mid = 0.5 * (x0 + x1);
            if (mid <= x0 || mid >= x1) break;
            double fm = p.eval(mid);
            if (fm == 0.0) { x0 = x1 = mid; break; }
            if ((fm > 0.0) == (f0 > 0.0)) {
                x0 = mid;
                f0 = fm;
            } else {
                x1 = mid;
            }
        }
        out.push_back(0.5 * (x0 + x1));
    }
}

} // namespace

std::vector<double> real_roots(const Polynomial& p, const Interval& iv) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no root set");
    if (p.degree() == 0) return {};
    // Cauchy bound: every root satisfies |s| <= 1 + max |c_k / c_d|.
    double lead = std::fabs(p.leading());
    double rad = 0.0;
    for (int k = 0; k < p.degree(); ++k)
        rad = std::max(rad, std::fabs(p.coeff(k)) / lead);
    rad += 1.0;
    double lo = std::max(iv.a.v, -rad);
    double hi = std::min(iv.b.v, rad);
    std::vector<double> out;
    roots_in_window(p, lo, hi, out);
    std::sort(out.begin(), out.end());
    return out;
}

ThreeTerm three_term_coefficients(const EquationClass& cls, int l) {
    check_degree(l, "three_term_coefficients");
    Polynomial pl = build_psi(cls, l);
    Polynomial s_pl = Polynomial({0.0, 1.0}) * pl;
    double denom = inner_product(cls, {0, pl}, {0, pl});
    ThreeTerm r{};
    r.b = inner_product(cls, {0, s_pl}, {0, pl}) / denom;
    if (l >= 1) {
        Polynomial pm = build_psi(cls, l - 1);
        double dm = inner_product(cls, {0, pm}, {0, pm});
        r.g = inner_product(cls, {0, s_pl}, {0, pm}) / dm;
    }
    return r;
}

} // namespace hypoly
