#pragma once

#include <Eigen/Dense>

#include "hypoly/eqclass.hpp"
#include "hypoly/report.hpp"
#include "hypoly/specfun.hpp"

namespace hypoly {

/// Raising step A_m = kappa d/ds - m kappa': on kappa^m p it acts as
/// (m, p) -> (m+1, p').  rep.m must equal m.
LadderRep apply_A(const EquationClass& cls, int m, const LadderRep& rep);

/// Lowering step A_m^+ = -kappa d/ds - tau/kappa - (m-1) kappa': on
/// kappa^(m+1) q it acts as (m+1, q) -> (m, -sigma q' - m sigma' q - tau q).
/// rep.m must equal m + 1.
LadderRep apply_A_plus(const EquationClass& cls, int m, const LadderRep& rep);

/// H_m = A_m^+ A_m + lambda_m, applied in factorized form.  rep.m must be m.
LadderRep apply_H(const EquationClass& cls, int m, const LadderRep& rep);

/// Pointwise value of H_m f at s from the explicit second-order form
///   -sigma f'' - tau f' + [ m(m-2)/4 (sigma')^2/sigma + m tau sigma'/(2 sigma)
///                           - m(m-2) sigma''/2 - m tau' ] f,
/// used as an independent cross-check of the factorized action.  Requires
/// |sigma(s)| > 1e-3 so the 1/sigma terms stay conditioned.
double apply_H_pointwise(const EquationClass& cls, int m, const LadderRep& rep,
                         double s);

/// Psi_{l,m} reconstructed by chaining lowering steps down from the top:
/// Psi_{l,m} = A_m^+/(lambda_l-lambda_m) ... A_{l-1}^+/(lambda_l-lambda_{l-1})
/// applied to Psi_{l,l}.
LadderRep ladder_chain(const EquationClass& cls, int l, int m);

enum class OpKind { Lower, Raise, Shift, Number, Hamiltonian };

/// Dense matrix of an operator on the first N basis vectors |n> of the m-th
/// associated system (|n> is the normalized function with degree index
/// l = m + n).  entries(i, j) is the coefficient of |j> in the image of |i>
/// (rows index the input basis), so Lower is nonzero on the sub-diagonal and
/// Raise on the super-diagonal.
struct OperatorMatrix {
    EquationClass cls;
    int m = 0;
    int size = 0;
    OpKind kind = OpKind::Lower;
    Eigen::MatrixXd entries;
};

/// The matrix family of the m-th associated system, defined for the classes
/// with Lambda = +inf (one, s, 1-s2); throws UnsupportedClass otherwise.
///   lower  a_m:      sub-diagonal sqrt(e_n), e_n = lambda_{m+n} - lambda_m
///   raise  a_m^+:    transpose of lower
///   shift  U_m:      identity into the (m+1) basis
///   number R_m:      diagonal (-sigma''(m+n) - alpha)/2
///   ham    H_m - lambda_m: diagonal e_n
struct ShiftMatrices {
    OperatorMatrix lower;
    OperatorMatrix raise;
    OperatorMatrix shift;
    OperatorMatrix number;
    OperatorMatrix ham;
};
ShiftMatrices shift_matrices(const EquationClass& cls, int m, int N);

/// Applies the operator to a coefficient vector: out_j = sum_i c_i M(i, j).
Eigen::VectorXd apply(const OperatorMatrix& op, const Eigen::VectorXd& coeffs);
Eigen::VectorXcd apply(const OperatorMatrix& op, const Eigen::VectorXcd& coeffs);

/// Matrix of the composed operator "first A, then B" under the row-input
/// entry convention.
Eigen::MatrixXd op_compose(const OperatorMatrix& a, const OperatorMatrix& b);
/// Matrix of [A, B] = A B - B A as operators.
Eigen::MatrixXd op_commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Truncation-aware matrix identities of the shift family at size N, all
/// asserted on the interior (N-1) x (N-1) block only:
///   [a_m, a_m^+] = diag(lambda_{m+n+1} - lambda_{m+n})
///   [a_m^+, a_m] = -2 R_m
///   [R_m, a_m^+] = -(sigma''/2) a_m^+,  [R_m, a_m] = (sigma''/2) a_m
///   sigma in {1, s}:  [P_+, P_-] = -1 with P_+- = sqrt(-1/alpha) a_m^+-
///   sigma = 1-s^2:    K_+ = a_m^+, K_- = a_m, K_0 = R_m close su(1,1):
///                     [K_+, K_-] = -2 K_0, [K_0, K_+-] = +-K_+-, and the
///                     Casimir K_- K_+ - K_0(K_0 + 1) has the constant
///                     diagonal -(alpha/2 - m)(alpha/2 - m + 1).
Report commutator_check(const EquationClass& cls, int m, int N,
                        double tol = 1e-10);

/// Intertwining of the factorized Hamiltonians across one level:
/// H_m A_m^+ = A_m^+ H_{m+1} on Psi_{l,m+1} and A_m H_m = H_{m+1} A_m on
/// Psi_{l,m}, both as exact coefficient identities.
Report intertwining_check(const EquationClass& cls, int l_max,
                          double tol = 1e-10);

} // namespace hypoly
