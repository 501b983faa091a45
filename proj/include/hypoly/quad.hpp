#pragma once

#include <functional>

#include "hypoly/eqclass.hpp"
#include "hypoly/specfun.hpp"

namespace hypoly {

/// Variable-change applied before the nested trapezoid refinement.  None
/// selects automatically from the interval shape:
///   finite (a,b)      -> FiniteAffine        s = mid + halfwidth*tanh(x)
///   (a, inf)          -> SemiInfiniteExp     s = a + exp(x)
///   (-inf, inf)       -> DoublyInfiniteTanh  s = sinh(x)
/// with x = (pi/2) sinh t; the trapezoid runs over t.
enum class Transform { None, SemiInfiniteExp, DoublyInfiniteTanh, FiniteAffine };

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 10;           // step-halving levels below h = 1/2
    Transform transform = Transform::None;
};

/// Evaluation node handed to integrands.  dist_a = s - a and dist_b = b - s
/// are computed from the map directly, so they stay accurate when a node
/// crowds an endpoint; they are +inf toward an infinite endpoint.
struct QuadPoint {
    double s;
    double dist_a;
    double dist_b;
};

using Integrand = std::function<double(const QuadPoint&)>;

struct QuadResult {
    double value;
    double err_estimate; // difference of the last two refinement levels
    int levels;          // refinement levels actually used
};

/// Deterministic adaptive integration of f over iv.  Throws
/// QuadratureDivergence when the tail cannot be resolved (the integrand
/// does not decay under the map), when partial sums pass 1e100, or when the
/// refinement budget is exhausted without convergence.
QuadResult integrate(const Integrand& f, const Interval& iv,
                     const QuadratureSpec& spec = {});

/// Weighted inner product <f, g> = integral of f * g * rho over the class
/// interval, with f, g in kappa-power form (the integrand is assembled in
/// the log domain so endpoint singularities and far tails stay finite).
double inner_product(const EquationClass& cls, const LadderRep& f,
                     const LadderRep& g, const QuadratureSpec& spec = {});

} // namespace hypoly
