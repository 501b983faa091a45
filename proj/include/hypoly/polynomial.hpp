#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hypoly {

/// Dense real polynomial, coefficients stored ascending: c[k] multiplies s^k.
/// The zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<double> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(double a) { return Polynomial({a}); }
    /// a * s^k
    static Polynomial monomial(int k, double a = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    double coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0.0;
    }
    const std::vector<double>& coeffs() const { return c_; }
    double leading() const { return c_.empty() ? 0.0 : c_.back(); }
    /// Largest |coefficient| (0 for the zero polynomial).
    double max_abs_coeff() const;

    double eval(double s) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double a);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double x) { return a *= x; }
    friend Polynomial operator*(double x, Polynomial a) { return a *= x; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    std::vector<double> c_;
};

/// p(c1*s + c0).
Polynomial compose_affine(const Polynomial& p, double c1, double c0);

/// Euclidean division: p = q*d + r with deg r < deg d.  d must be nonzero.
struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};
PolyDivision divide(const Polynomial& p, const Polynomial& d);

/// max_k |p_k - q_k| / max(1, |p|_inf, |q|_inf): scale-aware coefficient gap.
double coeff_distance(const Polynomial& p, const Polynomial& q);

/// Sign and log of |p(s)|, stable for |s| far outside the unit scale where
/// direct Horner evaluation would overflow.  Returns sign 0 with log -inf
/// when the value underflows to zero.
struct SignedLog {
    int sign;
    double log_abs;
};
SignedLog eval_sign_log(const Polynomial& p, double s);

} // namespace hypoly
