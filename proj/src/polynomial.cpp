#include "hypoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypoly {

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::monomial(int k, double a) {
    if (k < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = a;
    return Polynomial(std::move(c));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double x : c_) m = std::max(m, std::fabs(x));
    return m;
}

double Polynomial::eval(double s) const {
    double v = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * s + c_[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) throw std::invalid_argument("cannot rescale the zero polynomial");
    Polynomial r = *this;
    double lead = r.c_.back();
    for (double& x : r.c_) x /= lead;
    r.c_.back() = 1.0;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (double& x : r.c_) x = -x;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(double a) {
    for (double& x : c_) x *= a;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial compose_affine(const Polynomial& p, double c1, double c0) {
    // Horner in the affine argument: result = ((..)*arg + c_k)*arg + ...
    Polynomial arg({c0, c1});
    Polynomial r;
    for (int k = p.degree(); k >= 0; --k) {
        r = r * arg;
        r += Polynomial::constant(p.coeff(k));
    }
    return r;
}

PolyDivision divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    std::vector<double> rem(p.coeffs());
    int dp = p.degree(), dd = d.degree();
    if (dp < dd) return {Polynomial(), p};
    std::vector<double> quot(static_cast<std::size_t>(dp - dd) + 1, 0.0);
    double lead = d.leading();
    for (int k = dp; k >= dd; --k) {
        double f = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dd)] = f;
        if (f == 0.0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= f * d.coeff(j);
        rem[static_cast<std::size_t>(k)] = 0.0;
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 1)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

double coeff_distance(const Polynomial& p, const Polynomial& q) {
    double scale = std::max({1.0, p.max_abs_coeff(), q.max_abs_coeff()});
    double worst = 0.0;
    int n = std::max(p.degree(), q.degree());
    for (int k = 0; k <= n; ++k)
        worst = std::max(worst, std::fabs(p.coeff(k) - q.coeff(k)));
    return worst / scale;
}

SignedLog eval_sign_log(const Polynomial& p, double s) {
    if (p.is_zero()) return {0, -std::numeric_limits<double>::infinity()};
    double as = std::fabs(s);
    double v;
    int sign_extra = 1;
    double log_extra = 0.0;
    if (as <= 1e3) {
        v = p.eval(s);
    } else {
        // p(s) = s^d * q(1/s) with q(u) = c_d + c_{d-1} u + ... ; |1/s| < 1e-3
        // keeps the Horner sum near the leading coefficient's scale.
        double u = 1.0 / s;
        v = 0.0;
        for (int k = 0; k <= p.degree(); ++k) v = v * u + p.coeff(k);
        log_extra = p.degree() * std::log(as);
        if (s < 0.0 && (p.degree() % 2) != 0) sign_extra = -1;
    }
    if (v == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    int sgn = (v > 0.0 ? 1 : -1) * sign_extra;
    return {sgn, std::log(std::fabs(v)) + log_extra};
}

} // namespace hypoly
