#pragma once

#include <map>

#include "hypoly/eqclass.hpp"
#include "hypoly/polynomial.hpp"

namespace hypoly {

struct QuadratureSpec; // quad.hpp

/// Closed form kappa(s)^m * p(s) with kappa = sqrt(sigma).  All ladder and
/// Hamiltonian actions stay inside this family, which keeps the operator
/// identities exact at the coefficient level.
struct LadderRep {
    int m = 0;
    Polynomial p;
};

/// Psi_{l,m} = kappa^m d^m/ds^m Psi_l as a LadderRep (so its p part is the
/// m-th derivative of the monic degree-l solution).  Requires 0 <= m <= l
/// and l below the cutoff.
LadderRep build_psi_lm(const EquationClass& cls, int l, int m);

/// Evaluates kappa(s)^m p(s); s must lie where sigma > 0 (throws DomainError
/// otherwise, via kappa).  Negative m is admitted on the open interval.
double eval_rep(const EquationClass& cls, const LadderRep& rep, double s);

/// ||Psi_{l,m}||: square root of the weighted self inner product, computed
/// by quadrature.
double norm(const EquationClass& cls, int l, int m);
double norm(const EquationClass& cls, int l, int m, const QuadratureSpec& spec);

/// Same norm assembled from ||Psi_{l,0}|| and the exact factor ladder
/// ||Psi_{l,j+1}|| = sqrt(lambda_l - lambda_j) ||Psi_{l,j}||.
double norm_via_ladder(const EquationClass& cls, int l, int m);

/// Unit-norm scaling of Psi_{l,m}: returns {rep, scale} with
/// scale = 1/||Psi_{l,m}|| and rep.p already multiplied by scale.
struct NormalizedRep {
    LadderRep rep;
    double scale;
};
NormalizedRep normalized(const EquationClass& cls, int l, int m);

/// How a NormTable's entries were produced.
enum class NormPath { Quadrature, Ladder };

/// Norms l -> ||Psi_{l,m}|| for a fixed class and level m.
struct NormTable {
    EquationClass cls;
    int m = 0;
    NormPath path = NormPath::Quadrature;
    std::map<int, double> entries;

    double at(int l) const;
};

NormTable build_norm_table(const EquationClass& cls, int m, int l_max,
                           NormPath path = NormPath::Quadrature);

} // namespace hypoly
