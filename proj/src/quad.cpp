#include "hypoly/quad.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hypoly/polynomial.hpp"

namespace hypoly {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kTCap = 6.5;          // |t| beyond which nodes degenerate
constexpr double kSumCap = 1e100;      // partial-sum magnitude => divergence
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
    QuadPoint pt;
    double dsdt;
    bool usable; // false once the map degenerates (overflow/underflow)
};

Transform pick_transform(const Interval& iv) {
    bool fa = iv.a.is_finite(), fb = iv.b.is_finite();
    if (fa && fb) return Transform::FiniteAffine;
    if (fa && !fb) return Transform::SemiInfiniteExp;
    if (!fa && !fb) return Transform::DoublyInfiniteTanh;
    throw DomainError("intervals of shape (-inf, b) are not supported");
}

Node map_node(Transform tr, const Interval& iv, double t) {
    double x = kHalfPi * std::sinh(t);
    double dxdt = kHalfPi * std::cosh(t);
    Node n{};
    switch (tr) {
        case Transform::FiniteAffine: {
            double c = 0.5 * (iv.a.v + iv.b.v);
            double w = 0.5 * (iv.b.v - iv.a.v);
            // comp = 1 - |tanh x| = 2 e^{-2|x|} / (1 + e^{-2|x|}), exact
            // complement so endpoint distances keep full relative accuracy.
            double em = std::exp(-2.0 * std::fabs(x));
            double comp = 2.0 * em / (1.0 + em);
            double tanhx = (x >= 0.0) ? 1.0 - comp : comp - 1.0;
            double da = (x >= 0.0) ? w * (2.0 - comp) : w * comp;
            double db = (x >= 0.0) ? w * comp : w * (2.0 - comp);
            // sech^2 = (1 - tanh)(1 + tanh) = comp (2 - comp).
            double dsdt = w * comp * (2.0 - comp) * dxdt;
            n.pt = {c + w * tanhx, da, db};
            n.dsdt = dsdt;
            n.usable = comp > 0.0 && std::isfinite(dsdt) && dsdt > 0.0;
            return n;
        }
        case Transform::SemiInfiniteExp: {
            double ex = std::exp(x);
            n.pt = {iv.a.v + ex, ex, kInf};
            n.dsdt = ex * dxdt;
            n.usable = ex > 0.0 && std::isfinite(n.pt.s) && std::isfinite(n.dsdt);
            return n;
        }
        case Transform::DoublyInfiniteTanh: {
            double s = std::sinh(x);
            n.pt = {s, kInf, kInf};
            n.dsdt = std::cosh(x) * dxdt;
            n.usable = std::isfinite(s) && std::isfinite(n.dsdt);
            return n;
        }
        default:
            throw DomainError("transform does not match the interval shape");
    }
}

struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

[[noreturn]] void throw_divergence(const char* what, double h, double at_t) {
    std::ostringstream os;
    os << "integral diverges (" << what << ") at refinement h = " << h
       << ", t = " << at_t;
    throw QuadratureDivergence(os.str());
}

struct LevelSum {
    double value; // h * signed node sum
    double l1;    // h * sum of |term|, the scale any cancellation happens at
};

// One trapezoid level: h * sum of f(phi(j h)) phi'(j h), expanding outward
// from t = 0 until the terms fall below the tail threshold.  A tail that is
// still live when the map degenerates or |t| passes the cap means the
// integrand does not decay under the transform => divergence.
LevelSum level_sum(const Integrand& f, Transform tr, const Interval& iv,
                   const QuadratureSpec& spec, double h) {
    auto term_at = [&](double t) -> std::pair<double, bool> {
        Node n = map_node(tr, iv, t);
        if (!n.usable) return {0.0, false};
        double fv = f(n.pt);
        double term = fv * n.dsdt;
        if (!std::isfinite(term)) {
            // endpoint underflow: a singular-but-integrable factor can hit
            // +inf after its distance underflows while the node weight has
            // already collapsed; the true contribution is negligible.
            if (!std::isfinite(fv) && n.dsdt < 1e-200) return {0.0, false};
            throw_divergence("non-finite integrand value", h, t);
        }
        return {term, true};
    };

    Kahan acc;
    double l1 = 0.0;
    auto [t0, ok0] = term_at(0.0);
    if (ok0) {
        acc.add(t0);
        l1 += std::fabs(t0);
    }

    for (int dir = 0; dir < 2; ++dir) {
        double sgn = (dir == 0) ? 1.0 : -1.0;
        int below = 0;
        bool resolved = false;
        // Largest |term| met while walking this direction (the centre node
        // seeds it).  The tail stop may only fire once the walk has dropped
        // well below that peak: terms can be tiny near t = 0 simply because
        // the integrand vanishes at the centre of the map, with all of the
        // mass still ahead.
        double peak = std::fabs(t0);
        double thr =
            std::max(spec.abs_tol / h, spec.rel_tol * std::fabs(acc.sum)) * 1e-2;
        for (int j = 1;; ++j) {
            double t = sgn * h * j;
            if (std::fabs(t) > kTCap) break;
            auto [term, usable] = term_at(t);
            if (!usable) {
                // The map degenerated.  Safe to stop if the tail was already
                // decaying, or if this whole direction never rose above the
                // negligibility threshold.
                resolved = below > 0 || peak <= thr;
                break;
            }
            acc.add(term);
            l1 += std::fabs(term);
            if (std::fabs(h * acc.sum) > kSumCap)
                throw_divergence("partial sums exceed 1e100", h, t);
            double a = std::fabs(term);
            if (a > peak) peak = a;
            thr = std::max(spec.abs_tol / h,
                           spec.rel_tol * std::fabs(acc.sum)) * 1e-2;
            if (a <= thr && (a == 0.0 || a <= 1e-4 * peak)) {
                if (++below >= 2) { resolved = true; break; }
            } else {
                below = 0;
            }
        }
        if (!resolved)
            throw_divergence("tail does not decay under the variable change", h,
                             sgn * kTCap);
    }
    return {h * acc.sum, h * l1};
}

} // namespace

QuadResult integrate(const Integrand& f, const Interval& iv,
                     const QuadratureSpec& spec) {
    Transform tr =
        (spec.transform == Transform::None) ? pick_transform(iv) : spec.transform;
    if (tr == Transform::FiniteAffine && !(iv.a.is_finite() && iv.b.is_finite()))
        throw DomainError("FiniteAffine needs finite endpoints");

    double h = 0.5;
    LevelSum prev = level_sum(f, tr, iv, spec, h);
    for (int level = 1; level <= spec.max_depth; ++level) {
        h *= 0.5;
        LevelSum cur = level_sum(f, tr, iv, spec, h);
        double err = std::fabs(cur.value - prev.value);
        // Convergence is judged against the magnitude sum, not the result:
        // a strongly cancelling integrand (orthogonality off-diagonals) has
        // a near-zero value whose attainable absolute precision is set by
        // the scale of the terms that cancelled.  Two refinements minimum so
        // an accidental coarse-level agreement cannot end the loop.
        double scale = std::max(std::fabs(cur.value), cur.l1);
        if (level >= 2 &&
            err <= std::max(spec.rel_tol * scale, spec.abs_tol))
            return {cur.value, err, level};
        prev = cur;
    }
    std::ostringstream os;
    os << "refinement exhausted after " << spec.max_depth
       << " levels without convergence";
    throw QuadratureDivergence(os.str());
}

double inner_product(const EquationClass& cls, const LadderRep& f,
                     const LadderRep& g, const QuadratureSpec& spec) {
    // f*g*rho = p_f p_g kappa^(m_f + m_g) rho and kappa^m = exp((m/2) log sigma)
    // uniformly in the parity and sign of m (sigma > 0 inside the interval).
    double half = 0.5 * static_cast<double>(f.m + g.m);
    const Polynomial& pf = f.p;
    const Polynomial& pg = g.p;
    Integrand ig = [&cls, &pf, &pg, half](const QuadPoint& q) -> double {
        SignedLog a = eval_sign_log(pf, q.s);
        if (a.sign == 0) return 0.0;
        SignedLog b = eval_sign_log(pg, q.s);
        if (b.sign == 0) return 0.0;
        double lw = cls.log_weight(q.s, q.dist_a, q.dist_b);
        double ls = cls.log_sigma(q.s, q.dist_a, q.dist_b);
        double lg = a.log_abs + b.log_abs + lw + half * ls;
        return a.sign * b.sign * std::exp(lg);
    };
    return integrate(ig, cls.interval, spec).value;
}

} // namespace hypoly
