#pragma once

#include <array>
#include <limits>
#include <string>

#include "hypoly/errors.hpp"

namespace hypoly {

/// Real number extended with +/-infinity endpoints.  Comparisons against
/// finite values (including the integer degree cutoff tests l < Lambda)
/// are exact because IEEE doubles represent the infinities exactly.
struct ExtendedReal {
    double v = 0.0;

    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double x) : v(x) {}

    static constexpr ExtendedReal inf() {
        return ExtendedReal{std::numeric_limits<double>::infinity()};
    }
    static constexpr ExtendedReal neg_inf() {
        return ExtendedReal{-std::numeric_limits<double>::infinity()};
    }
    constexpr bool is_finite() const {
        return v > -std::numeric_limits<double>::infinity() &&
               v < std::numeric_limits<double>::infinity();
    }
    friend constexpr bool operator<(ExtendedReal a, ExtendedReal b) { return a.v < b.v; }
    friend constexpr bool operator>(ExtendedReal a, ExtendedReal b) { return a.v > b.v; }
    friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) { return a.v == b.v; }
};

/// Open interval (a, b); either endpoint may be infinite.
struct Interval {
    ExtendedReal a;
    ExtendedReal b;

    bool contains(double s) const { return s > a.v && s < b.v; }
};

/// The six admissible shapes of the leading coefficient sigma(s).
enum class SigmaKind {
    One,         // sigma = 1          on (-inf, inf)
    S,           // sigma = s          on (0, inf)
    OneMinusS2,  // sigma = 1 - s^2    on (-1, 1)
    S2MinusOne,  // sigma = s^2 - 1    on (1, inf)
    S2,          // sigma = s^2        on (0, inf)
    S2PlusOne    // sigma = s^2 + 1    on (-inf, inf)
};

const char* to_string(SigmaKind kind);

/// Parses the CLI token for a class kind: one, s, 1-s2, s2-1, s2, s2+1.
SigmaKind parse_sigma_kind(const std::string& token);

/// Degree cutoff: polynomial solutions of degree l are square integrable
/// exactly for l < value (strict).  value is +infinity when every degree
/// is admissible.
struct Cutoff {
    ExtendedReal value;

    bool allows(int l) const { return static_cast<double>(l) < value.v; }
};

/// A validated equation sigma(s) y'' + tau(s) y' + lambda y = 0 with
/// tau(s) = alpha*s + beta, together with the weight rho that makes it
/// self-adjoint ((sigma*rho)' = tau*rho) and the orthogonality interval.
///
/// Construct through validate(); direct aggregate construction bypasses
/// the admissibility checks.
struct EquationClass {
    SigmaKind kind;
    double alpha;
    double beta;

    /// sigma = sig2*s^2 + sig1*s + sig0.
    double sig2, sig1, sig0;
    Interval interval;

    double sigma(double s) const { return (sig2 * s + sig1) * s + sig0; }
    double sigma_prime(double s) const { return 2.0 * sig2 * s + sig1; }
    double sigma_dd() const { return 2.0 * sig2; }
    double tau(double s) const { return alpha * s + beta; }

    /// kappa = sqrt(sigma); defined only where sigma(s) > 0.
    double kappa(double s) const;

    /// Weight rho(s) for s strictly inside the interval.
    double weight(double s) const;

    /// log rho(s); dist_a = s - a and dist_b = b - s may be supplied by a
    /// caller that knows them to higher accuracy than the subtraction gives
    /// (quadrature nodes crowding an endpoint).
    double log_weight(double s) const;
    double log_weight(double s, double dist_a, double dist_b) const;

    /// log sigma(s) for s inside the interval, using endpoint distances
    /// where sigma vanishes at an endpoint.
    double log_sigma(double s, double dist_a, double dist_b) const;

    /// sigma(s)^m * rho(s): the weight of the m-th associated system.
    double weight_m(int m, double s) const;

    /// Eigenvalue for which a degree-l polynomial solution exists:
    /// lambda_l = -(sigma''/2) l (l-1) - alpha l.
    double eigenvalue(int l) const;

    /// Square-integrability cutoff Lambda.
    Cutoff cutoff() const;

    /// "<kind>:<alpha>:<beta>" round-trippable through parse_class_spec.
    std::string spec_string() const;
};

/// Checks the admissibility constraints for (kind, alpha, beta) and returns
/// the fully derived class; throws ParameterOutOfRange on violation.
///
///   One:        alpha < 0
///   S:          alpha < 0, beta > 0
///   OneMinusS2: alpha < beta < -alpha
///   S2MinusOne: -beta < alpha < 0
///   S2:         alpha < 0, beta > 0
///   S2PlusOne:  alpha < 0
EquationClass validate(SigmaKind kind, double alpha, double beta);

/// Parses "<kind>:<alpha>:<beta>" (e.g. "1-s2:-2:0") and validates it.
EquationClass parse_class_spec(const std::string& spec);

} // namespace hypoly
