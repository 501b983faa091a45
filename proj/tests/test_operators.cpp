#include <doctest.h>

#include <cmath>

#include "hypoly/errors.hpp"
#include "hypoly/operators.hpp"
#include "hypoly/specfun.hpp"
#include "test_grids.hpp"

using namespace hypoly;

TEST_CASE("A_m raises the level by differentiating the polynomial part") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    LadderRep r20 = build_psi_lm(leg, 2, 0);
    LadderRep up = apply_A(leg, 0, r20);
    CHECK(up.m == 1);
    CHECK(coeff_distance(up.p, Polynomial({0.0, 2.0})) < 1e-15);
    CHECK_THROWS_AS(apply_A(leg, 1, r20), RepMismatch);
}

TEST_CASE("A_m+ lowers and scales by the eigenvalue gap") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    LadderRep r21 = build_psi_lm(leg, 2, 1);
    LadderRep down = apply_A_plus(leg, 0, r21);
    CHECK(down.m == 0);
    // A_0+ Psi_{2,1} = (lambda_2 - lambda_0) Psi_{2,0} = 6 Psi_{2,0}.
    CHECK(coeff_distance(down.p, 6.0 * build_psi_lm(leg, 2, 0).p) < 1e-14);
    CHECK_THROWS_AS(apply_A_plus(leg, 1, r21), RepMismatch);
}

TEST_CASE("factorized Hamiltonian has Psi_{l,m} as eigenvector") {
    for (const EquationClass& cls : testgrid::coverage_classes()) {
        for (int l = 1; l <= 4; ++l) {
            if (!cls.cutoff().allows(l)) break;
            for (int m = 0; m <= l; ++m) {
                LadderRep rep = build_psi_lm(cls, l, m);
                LadderRep h = apply_H(cls, m, rep);
                CHECK(coeff_distance(h.p, cls.eigenvalue(l) * rep.p) < 1e-10);
            }
        }
    }
}

TEST_CASE("pointwise Hamiltonian form matches a frozen Legendre value") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    LadderRep r21 = build_psi_lm(leg, 2, 1);
    // H_1 Psi_{2,1}(0.5) = 6 * kappa(0.5) * 1 = 6 * sqrt(0.75).
    CHECK(apply_H_pointwise(leg, 1, r21, 0.5) ==
          doctest::Approx(6.0 * std::sqrt(0.75)).epsilon(1e-12));
    // The explicit form divides by sigma, so it refuses near sigma = 0.
    CHECK_THROWS_AS(apply_H_pointwise(leg, 1, r21, 0.99999999), DomainError);
}

TEST_CASE("lowering chains rebuild the associated functions") {
    EquationClass lag = parse_class_spec("s:-2:3");
    for (int l : {1, 3})
        for (int m = 0; m < l; ++m) {
            LadderRep direct = build_psi_lm(lag, l, m);
            LadderRep chained = ladder_chain(lag, l, m);
            CHECK(chained.m == m);
            CHECK(coeff_distance(chained.p, direct.p) < 1e-11);
        }
}

TEST_CASE("shift matrices exist only for the infinite-ladder classes") {
    CHECK_THROWS_AS(shift_matrices(parse_class_spec("s2:-7:1"), 0, 8),
                    UnsupportedClass);
    CHECK_THROWS_AS(shift_matrices(parse_class_spec("s2-1:-2:3"), 0, 8),
                    UnsupportedClass);
    CHECK_THROWS_AS(shift_matrices(parse_class_spec("s2+1:-4:0"), 0, 8),
                    UnsupportedClass);
    CHECK_THROWS_AS(shift_matrices(parse_class_spec("one:-2:0"), -1, 8),
                    IndexError);
    CHECK_THROWS_AS(shift_matrices(parse_class_spec("one:-2:0"), 0, 1),
                    ParameterOutOfRange);
}

TEST_CASE("shift matrix entries take their closed forms") {
    EquationClass herm = parse_class_spec("one:-2:0");
    ShiftMatrices sm = shift_matrices(herm, 0, 6);
    for (int n = 1; n < 6; ++n) {
        CHECK(sm.lower.entries(n, n - 1) ==
              doctest::Approx(std::sqrt(2.0 * n)).epsilon(1e-15));
        CHECK(sm.ham.entries(n, n) == doctest::Approx(2.0 * n));
    }
    CHECK(sm.lower.entries(0, 0) == 0.0);
    CHECK((sm.raise.entries - sm.lower.entries.transpose()).norm() == 0.0);
    CHECK((sm.shift.entries -
           Eigen::MatrixXd::Identity(6, 6)).norm() == 0.0);
    // Heisenberg-Weyl number-like diagonal R_m = (-sigma''(m+n) - alpha)/2 = 1.
    for (int n = 0; n < 6; ++n)
        CHECK(sm.number.entries(n, n) == doctest::Approx(1.0));

    EquationClass leg = parse_class_spec("1-s2:-2:0");
    ShiftMatrices sl = shift_matrices(leg, 1, 6);
    for (int n = 1; n < 6; ++n)
        CHECK(sl.ham.entries(n, n) ==
              doctest::Approx(n * (n + 3.0)).epsilon(1e-15)); // n(n+2m-alpha-1)
}

TEST_CASE("apply uses the row-input convention") {
    EquationClass herm = parse_class_spec("one:-2:0");
    ShiftMatrices sm = shift_matrices(herm, 0, 4);
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(4);
    e1(1) = 1.0;
    Eigen::VectorXd lowered = apply(sm.lower, e1);
    CHECK(lowered(0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(lowered(1) == 0.0);
    Eigen::VectorXd raised = apply(sm.raise, e1);
    CHECK(raised(2) == doctest::Approx(std::sqrt(4.0)));
}

TEST_CASE("composition gives the number operator exactly") {
    EquationClass herm = parse_class_spec("one:-2:0");
    ShiftMatrices sm = shift_matrices(herm, 0, 8);
    Eigen::MatrixXd ada = op_compose(sm.lower, sm.raise); // a+ a
    for (int n = 0; n < 8; ++n)
        CHECK(ada(n, n) == doctest::Approx(2.0 * n)); // e_n = -alpha n
    CHECK((ada - Eigen::MatrixXd(ada.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("interior-block commutator identities hold at N = 16") {
    for (const EquationClass& cls : testgrid::shiftable_classes())
        for (int m : {0, 1, 2}) {
            Report rep = commutator_check(cls, m, 16);
            CHECK(rep.all_pass());
            for (const IdentityCheck& c : rep.checks)
                CHECK(c.max_residual <= c.tolerance);
        }
}

TEST_CASE("Hamiltonians intertwine across neighbouring levels") {
    for (const EquationClass& cls : testgrid::coverage_classes()) {
        Report rep = intertwining_check(cls, 6);
        CHECK(rep.all_pass());
    }
}
