#include "hypoly/coherent.hpp"

#include <cmath>
#include <sstream>

#include "hypoly/operators.hpp"

namespace hypoly {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near_nonpositive_integer(double x) {
    double r = std::round(x);
    return r <= 0.0 && std::fabs(x - r) < 1e-12;
}

struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double gamma_fn(double x) {
    if (near_nonpositive_integer(x))
        throw PoleError("gamma has a pole at nonpositive integers");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));

    static const double g[9] = {
        0.99999999999980993,      676.5203681218851,    -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
    double xx = x - 1.0;
    double a = g[0];
    for (int i = 1; i < 9; ++i) a += g[i] / (xx + i);
    double t = xx + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, xx + 0.5) * std::exp(-t) * a;
}

double hyp0f1(double c, double z) {
    if (near_nonpositive_integer(c))
        throw PoleError("0F1(c; z) has poles at nonpositive integer c");
    Kahan acc;
    double term = 1.0;
    acc.add(term);
    for (int k = 0; k < 10000; ++k) {
        term *= z / ((c + k) * (k + 1.0));
        acc.add(term);
        if (std::fabs(term) < 1e-16 * std::fabs(acc.sum) && k >= 1) break;
    }
    return acc.sum;
}

double bessel_I(double nu, double z) {
    if (z < 0.0) throw DomainError("bessel_I requires z >= 0");
    if (z == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        if (std::fabs(nu - std::round(nu)) < 1e-12) return 0.0;
        throw DomainError(
            "bessel_I diverges at z = 0 for negative non-integer order");
    }
    double term = std::pow(0.5 * z, nu) / gamma_fn(nu + 1.0);
    double q = 0.25 * z * z;
    Kahan acc;
    acc.add(term);
    for (int n = 0; n < 600; ++n) {
        term *= q / ((n + 1.0) * (nu + n + 1.0));
        acc.add(term);
        if (std::fabs(term) < 1e-17 * std::fabs(acc.sum) && n >= 1) break;
    }
    return acc.sum;
}

namespace {

double bessel_k_reflection(double nu, double z) {
    return 0.5 * kPi * (bessel_I(-nu, z) - bessel_I(nu, z)) / std::sin(nu * kPi);
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt; the integrand is even in
// t and analytic, so the trapezoid rule converges spectrally under halving.
double bessel_k_integral(double nu, double z) {
    double prev = 0.0;
    double h = 0.5;
    for (int level = 0; level < 10; ++level) {
        double sum = 0.5 * std::exp(-z);
        for (int k = 1; k * h < 50.0; ++k) {
            double t = k * h;
            double term = std::exp(-z * std::cosh(t)) * std::cosh(nu * t);
            sum += term;
            if (term < 1e-18 * sum && k > 3) break;
        }
        double cur = h * sum;
        if (level > 0 && std::fabs(cur - prev) <= 1e-15 * std::fabs(cur))
            return cur;
        prev = cur;
        h *= 0.5;
    }
    return prev;
}

} // namespace

double bessel_K(double nu, double z) {
    if (z <= 0.0) throw DomainError("bessel_K requires z > 0");
    nu = std::fabs(nu);
    double rn = std::round(nu);
    // At integer order the reflection quotient degenerates to 0/0, and
    // evaluating it a small epsilon away poisons the I series with the
    // epsilon's own rounding (the nu + n + 1 factor crosses ~0), so integer
    // and near-integer orders always take the integral, which is stable and
    // convergent at every z.
    if (std::fabs(nu - rn) < 1e-8) return bessel_k_integral(rn, z);
    if (z > 6.0) return bessel_k_integral(nu, z);
    return bessel_k_reflection(nu, z);
}

namespace {

enum class Branch { Gaussian, Pochhammer };

Branch branch_of(const EquationClass& cls) {
    switch (cls.kind) {
        case SigmaKind::One:
        case SigmaKind::S:
            return Branch::Gaussian;
        case SigmaKind::OneMinusS2:
            return Branch::Pochhammer;
        default:
            throw UnsupportedClass(
                "coherent states are defined for the one, s, and 1-s2 classes");
    }
}

} // namespace

CoherentState make_coherent(const EquationClass& cls, int m,
                            std::complex<double> z, int N_trunc) {
    Branch br = branch_of(cls);
    if (m < 0) throw IndexError("make_coherent requires m >= 0");
    if (N_trunc < 2)
        throw ParameterOutOfRange("make_coherent requires N_trunc >= 2");

    CoherentState st{cls, m, z, N_trunc, {}, 1.0};
    st.coeffs.resize(static_cast<std::size_t>(N_trunc));
    std::complex<double> c;
    if (br == Branch::Gaussian) {
        st.prefactor = std::exp(std::norm(z) / (2.0 * cls.alpha));
        c = st.prefactor;
        for (int n = 0; n < N_trunc; ++n) {
            st.coeffs[static_cast<std::size_t>(n)] = c;
            c *= z / std::sqrt((n + 1.0) * (-cls.alpha));
        }
    } else {
        double cc = 2.0 * m - cls.alpha;
        st.prefactor = std::sqrt(gamma_fn(cc));
        c = 1.0;
        for (int n = 0; n < N_trunc; ++n) {
            st.coeffs[static_cast<std::size_t>(n)] = c;
            c *= z / std::sqrt((n + 1.0) * (n + cc));
        }
    }
    double peak = 0.0;
    for (const auto& cn : st.coeffs) peak = std::max(peak, std::abs(cn));
    if (!(std::abs(c) < 1e-14 * peak)) {
        std::ostringstream os;
        os << "truncation tail |c_" << N_trunc << "| = " << std::abs(c)
           << " is not below 1e-14 of the peak coefficient " << peak;
        throw TruncationInsufficient(os.str());
    }
    return st;
}

double eigen_check(const CoherentState& state) {
    ShiftMatrices sm = shift_matrices(state.cls, state.m, state.N_trunc);
    Eigen::VectorXcd c(state.N_trunc);
    for (int n = 0; n < state.N_trunc; ++n)
        c(n) = state.coeffs[static_cast<std::size_t>(n)];
    Eigen::VectorXcd lowered = hypoly::apply(sm.lower, c);
    double worst = 0.0;
    for (int n = 0; n + 1 < state.N_trunc; ++n)
        worst = std::max(worst, std::abs(lowered(n) - state.z * c(n)));
    return worst;
}

NormCheck norm_check(const CoherentState& state) {
    Kahan acc;
    for (const auto& cn : state.coeffs) acc.add(std::norm(cn));
    double expected = 1.0;
    if (branch_of(state.cls) == Branch::Pochhammer)
        expected = hyp0f1(2.0 * state.m - state.cls.alpha, std::norm(state.z));
    return {acc.sum, expected};
}

RadialMeasure radial_measure(const EquationClass& cls, int m) {
    Branch br = branch_of(cls);
    if (m < 0) throw IndexError("radial_measure requires m >= 0");
    RadialMeasure mu{cls, m, {}};
    if (br == Branch::Gaussian) {
        double a = -cls.alpha;
        mu.density = [a](double r) { return 2.0 * r / a; };
    } else {
        double cc = 2.0 * m - cls.alpha;
        double scale = 4.0 / gamma_fn(cc);
        mu.density = [cc, scale](double r) {
            return r > 0.0 ? scale * std::pow(r, cc) * bessel_K(cc - 1.0, 2.0 * r)
                           : 0.0;
        };
    }
    return mu;
}

std::vector<double> resolution_diagonals(const EquationClass& cls, int m,
                                         int N_basis,
                                         const QuadratureSpec& spec) {
    RadialMeasure mu = radial_measure(cls, m);
    if (N_basis < 1 || N_basis > 60)
        throw ParameterOutOfRange("resolution_diagonals requires 1 <= N_basis <= 60");
    Branch br = branch_of(cls);
    double cc = 2.0 * m - cls.alpha;

    std::vector<double> diag;
    diag.reserve(static_cast<std::size_t>(N_basis));
    for (int n = 0; n < N_basis; ++n) {
        // |c_n(r)|^2 as an explicit function of r = |z|.
        double denom = 1.0;
        for (int j = 1; j <= n; ++j) denom *= j;             // n!
        if (br == Branch::Gaussian)
            denom *= std::pow(-cls.alpha, n);                // n! (-alpha)^n
        else
            denom *= gamma_fn(n + cc) / gamma_fn(cc);        // n! (cc)_n
        auto cn2 = [&](double r) {
            double v = std::pow(r, 2 * n) / denom;
            if (br == Branch::Gaussian) v *= std::exp(r * r / cls.alpha);
            return v;
        };
        auto integrand_value = [&](double r) { return mu.density(r) * cn2(r); };

        // The radial integrand decays exponentially (Gaussian branch) or as
        // e^{-2r} through the Macdonald factor (Pochhammer branch), so the
        // half-line map resolves it directly; far nodes underflow to zero.
        Interval window{ExtendedReal{0.0}, ExtendedReal::inf()};
        QuadResult res = integrate(
            [&](const QuadPoint& pt) { return integrand_value(pt.s); }, window,
            spec);
        diag.push_back(res.value);
    }
    return diag;
}

double identity_resolution_check(const EquationClass& cls, int m, int N_basis,
                                 const QuadratureSpec& spec) {
    double worst = 0.0;
    for (double d : resolution_diagonals(cls, m, N_basis, spec))
        worst = std::max(worst, std::fabs(d - 1.0));
    return worst;
}

} // namespace hypoly
