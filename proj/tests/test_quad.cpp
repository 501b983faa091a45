#include <doctest.h>

#include <cmath>

#include "hypoly/errors.hpp"
#include "hypoly/polynomial.hpp"
#include "hypoly/quad.hpp"
#include "test_grids.hpp"

using namespace hypoly;

namespace {
const double kPi = 3.14159265358979323846;
const double kSqrtPi = 1.7724538509055160273;
} // namespace

TEST_CASE("doubly infinite: Gaussian integral and even moments") {
    Interval all{ExtendedReal::neg_inf(), ExtendedReal::inf()};
    QuadResult g = integrate(
        [](const QuadPoint& q) { return std::exp(-q.s * q.s); }, all);
    CHECK(g.value == doctest::Approx(kSqrtPi).epsilon(1e-12));
    CHECK(g.levels >= 1);

    // int s^{2k} e^{-s^2} = Gamma(k + 1/2).
    for (int k : {1, 2, 3, 4}) {
        QuadResult mk = integrate(
            [k](const QuadPoint& q) {
                return std::pow(q.s, 2 * k) * std::exp(-q.s * q.s);
            },
            all);
        CHECK(mk.value ==
              doctest::Approx(std::tgamma(k + 0.5)).epsilon(1e-11));
    }
}

TEST_CASE("semi-infinite: factorial moments of e^{-s}") {
    Interval half{ExtendedReal{0.0}, ExtendedReal::inf()};
    for (int k : {0, 1, 4, 7, 10}) {
        QuadResult mk = integrate(
            [k](const QuadPoint& q) {
                return std::pow(q.s, k) * std::exp(-q.s);
            },
            half);
        CHECK(mk.value == doctest::Approx(std::tgamma(k + 1.0)).epsilon(1e-11));
    }
}

TEST_CASE("finite interval with inverse-square-root endpoint singularities") {
    Interval iv{ExtendedReal{-1.0}, ExtendedReal{1.0}};
    // int_{-1}^{1} ds / sqrt(1-s^2) = pi, using the endpoint distances the
    // quadrature provides (1-s^2 = dist_a * dist_b here).
    QuadResult res = integrate(
        [](const QuadPoint& q) { return 1.0 / std::sqrt(q.dist_a * q.dist_b); },
        iv);
    CHECK(res.value == doctest::Approx(kPi).epsilon(1e-12));

    QuadResult res2 = integrate(
        [](const QuadPoint& q) {
            return q.s * q.s / std::sqrt(q.dist_a * q.dist_b);
        },
        iv);
    CHECK(res2.value == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("explicit transforms agree with the automatic choice") {
    Interval all{ExtendedReal::neg_inf(), ExtendedReal::inf()};
    QuadratureSpec spec;
    spec.transform = Transform::DoublyInfiniteTanh;
    QuadResult g = integrate(
        [](const QuadPoint& q) { return std::exp(-q.s * q.s); }, all, spec);
    CHECK(g.value == doctest::Approx(kSqrtPi).epsilon(1e-12));

    Interval half{ExtendedReal{2.0}, ExtendedReal::inf()};
    QuadratureSpec sexp;
    sexp.transform = Transform::SemiInfiniteExp;
    QuadResult e = integrate(
        [](const QuadPoint& q) { return std::exp(-(q.s - 2.0)); }, half, sexp);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero integrand integrates to zero") {
    Interval iv{ExtendedReal{0.0}, ExtendedReal{1.0}};
    QuadResult z = integrate([](const QuadPoint&) { return 0.0; }, iv);
    CHECK(z.value == 0.0);
}

TEST_CASE("non-integrable tails raise QuadratureDivergence") {
    Interval half{ExtendedReal{0.0}, ExtendedReal::inf()};
    CHECK_THROWS_AS(integrate([](const QuadPoint&) { return 1.0; }, half),
                    QuadratureDivergence);
    CHECK_THROWS_AS(integrate([](const QuadPoint& q) { return q.s; }, half),
                    QuadratureDivergence);
    // 1/s is non-integrable at the finite endpoint too.
    Interval unit{ExtendedReal{0.0}, ExtendedReal{1.0}};
    CHECK_THROWS_AS(
        integrate([](const QuadPoint& q) { return 1.0 / q.dist_a; }, unit),
        QuadratureDivergence);
}

TEST_CASE("weighted inner products reproduce closed-form norms") {
    LadderRep one{0, Polynomial::constant(1.0)};
    LadderRep s1{0, Polynomial::monomial(1)};

    EquationClass herm = parse_class_spec("one:-2:0");
    CHECK(inner_product(herm, one, one) ==
          doctest::Approx(kSqrtPi).epsilon(1e-12));
    CHECK(inner_product(herm, s1, s1) ==
          doctest::Approx(kSqrtPi / 2.0).epsilon(1e-12));
    CHECK(inner_product(herm, one, s1) == doctest::Approx(0.0).epsilon(1e-12));

    EquationClass lag = parse_class_spec("s:-1:1");
    LadderRep s2{0, Polynomial::monomial(2)};
    LadderRep s3{0, Polynomial::monomial(3)};
    CHECK(inner_product(lag, s2, s3) ==
          doctest::Approx(120.0).epsilon(1e-11)); // int s^5 e^-s = 5!

    EquationClass leg = parse_class_spec("1-s2:-2:0");
    CHECK(inner_product(leg, one, one) == doctest::Approx(2.0).epsilon(1e-12));

    // Chebyshev weight ((1-s)(1+s))^{-1/2}.
    EquationClass cheb = parse_class_spec("1-s2:-1:0");
    CHECK(inner_product(cheb, one, one) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(inner_product(cheb, s1, s1) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));

    // s^2 class: int_0^inf s^{-9} e^{-1/s} ds = 7!.
    EquationClass bes = parse_class_spec("s2:-7:1");
    CHECK(inner_product(bes, one, one) ==
          doctest::Approx(5040.0).epsilon(1e-11));

    // s^2+1 class with beta = 0: int (1+s^2)^{-3} ds = 3 pi / 8.
    EquationClass cau = parse_class_spec("s2+1:-4:0");
    CHECK(inner_product(cau, one, one) ==
          doctest::Approx(3.0 * kPi / 8.0).epsilon(1e-12));
}

TEST_CASE("kappa-power inner products fold sigma into the weight") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    // <(1, 1), (1, 1)> = int (1-s^2) ds = 4/3.
    LadderRep k1{1, Polynomial::constant(1.0)};
    CHECK(inner_product(leg, k1, k1) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    // Mixed levels: <(0, s), (2, 1)> = int s (1-s^2) ds = 0 by parity.
    LadderRep s1{0, Polynomial::monomial(1)};
    LadderRep k2{2, Polynomial::constant(1.0)};
    CHECK(inner_product(leg, s1, k2) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("norm integrals diverge past the square-integrability cutoff") {
    // Degree-4 solution of the s2:-7:1 equation: s^8 * s^{-9} ~ 1/s tail.
    EquationClass bes = parse_class_spec("s2:-7:1");
    LadderRep s4{0, Polynomial::monomial(4)};
    CHECK_THROWS_AS(inner_product(bes, s4, s4), QuadratureDivergence);
}
