#include <doctest.h>

#include <cmath>
#include <complex>

#include "hypoly/coherent.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/quad.hpp"
#include "test_grids.hpp"

using namespace hypoly;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma function: exact points, reflection, poles") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(gamma_fn(7.5) ==
          doctest::Approx(1871.2543057977863).epsilon(1e-13));
    CHECK(gamma_fn(-0.5) ==
          doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-13));
    // Gamma(x) Gamma(1-x) = pi / sin(pi x).
    CHECK(gamma_fn(0.3) * gamma_fn(0.7) ==
          doctest::Approx(kPi / std::sin(0.3 * kPi)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
}

TEST_CASE("0F1 series against Bessel identities") {
    CHECK(hyp0f1(2.5, 0.0) == 1.0);
    // 0F1(1; -(x/2)^2) = J_0(x): value at x = 1 and at the first zero of J_0.
    CHECK(hyp0f1(1.0, -0.25) ==
          doctest::Approx(0.76519768655796655).epsilon(1e-13));
    double j0zero = 2.404825557695773;
    CHECK(std::fabs(hyp0f1(1.0, -j0zero * j0zero / 4.0)) < 1e-12);
    // 0F1(nu+1; x^2/4) = Gamma(nu+1) (x/2)^-nu I_nu(x) with x = 2 sqrt(2).
    double x = 2.0 * std::sqrt(2.0);
    CHECK(hyp0f1(3.0, 2.0) ==
          doctest::Approx(gamma_fn(3.0) * std::pow(x / 2.0, -2.0) *
                          bessel_I(2.0, x))
              .epsilon(1e-13));
    CHECK_THROWS_AS(hyp0f1(0.0, 1.0), PoleError);
    CHECK_THROWS_AS(hyp0f1(-2.0, 1.0), PoleError);
}

TEST_CASE("modified Bessel I: frozen values and half-integer closed form") {
    CHECK(bessel_I(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(bessel_I(1.0, 2.0) ==
          doctest::Approx(1.5906368546373291).epsilon(1e-13));
    double z = 1.3;
    CHECK(bessel_I(0.5, z) ==
          doctest::Approx(std::sqrt(2.0 / (kPi * z)) * std::sinh(z))
              .epsilon(1e-13));
}

TEST_CASE("Macdonald K: half-integer closed forms across both regimes") {
    // K_{1/2}(z) = sqrt(pi/(2z)) e^-z; K_{3/2}(z) = same * (1 + 1/z).
    for (double z : {0.4, 1.0, 3.0, 5.9, 6.1, 9.0, 20.0, 45.0}) {
        double base = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
        CHECK(bessel_K(0.5, z) == doctest::Approx(base).epsilon(1e-9));
        CHECK(bessel_K(1.5, z) ==
              doctest::Approx(base * (1.0 + 1.0 / z)).epsilon(1e-9));
    }
}

TEST_CASE("Macdonald K: recurrence, symmetry, decay, domain") {
    // K_{nu+1}(z) = K_{nu-1}(z) + (2 nu / z) K_nu(z).
    for (double z : {0.5, 2.0, 4.0, 8.0, 15.0})
        for (double nu : {1.0, 1.7, 2.5}) {
            double lhs = bessel_K(nu + 1.0, z);
            double rhs = bessel_K(nu - 1.0, z) + (2.0 * nu / z) * bessel_K(nu, z);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    CHECK(bessel_K(-1.5, 2.0) == doctest::Approx(bessel_K(1.5, 2.0)));
    CHECK(bessel_K(1.0, 3.0) > bessel_K(1.0, 4.0));
    CHECK(bessel_K(0.0, 1.0) ==
          doctest::Approx(0.42102443824070834).epsilon(1e-12));
    CHECK(bessel_K(1.0, 1.0) ==
          doctest::Approx(0.60190723019723458).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_K(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_K(0.5, -1.0), DomainError);
}

TEST_CASE("Gaussian-branch coherent coefficients are Poissonian") {
    EquationClass cls = parse_class_spec("one:-1:0");
    CoherentState st = make_coherent(cls, 0, {1.0, 0.0}, 60);
    double pref = std::exp(-0.5);
    double fact = 1.0;
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) fact *= n;
        CHECK(std::abs(st.coeffs[static_cast<std::size_t>(n)] -
                       pref / std::sqrt(fact)) < 1e-14);
    }
    NormCheck nc = norm_check(st);
    CHECK(nc.expected == 1.0);
    CHECK(nc.computed == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigen_check(st) < 1e-12);
}

TEST_CASE("Pochhammer-branch coefficients and 0F1 norm") {
    EquationClass leg = parse_class_spec("1-s2:-2:0"); // cc = 2m - alpha = 2
    CoherentState st = make_coherent(leg, 0, {1.0, 0.0}, 60);
    CHECK(std::abs(st.coeffs[0] - 1.0) < 1e-14);
    CHECK(std::abs(st.coeffs[3] - 1.0 / 12.0) < 1e-14); // 1/sqrt(3! 4!)
    NormCheck nc = norm_check(st);
    CHECK(nc.expected ==
          doctest::Approx(1.5906368546373291).epsilon(1e-12)); // I_1(2)
    CHECK(nc.computed == doctest::Approx(nc.expected).epsilon(1e-12));
    CHECK(eigen_check(st) < 1e-12);
}

TEST_CASE("z = 0 collapses to the lowest basis vector") {
    EquationClass cls = parse_class_spec("s:-1:1");
    CoherentState st = make_coherent(cls, 1, {0.0, 0.0}, 20);
    CHECK(std::abs(st.coeffs[0]) == doctest::Approx(1.0));
    for (std::size_t n = 1; n < st.coeffs.size(); ++n)
        CHECK(std::abs(st.coeffs[n]) == 0.0);
    CHECK(eigen_check(st) == 0.0);
}

TEST_CASE("eigenproperty holds off the real axis") {
    EquationClass cls = parse_class_spec("one:-2:0");
    CoherentState st = make_coherent(cls, 0, {0.7, -1.1}, 80);
    CHECK(eigen_check(st) < 1e-12);
    EquationClass leg = parse_class_spec("1-s2:-3:1");
    CoherentState st2 = make_coherent(leg, 1, {-0.4, 1.3}, 80);
    CHECK(eigen_check(st2) < 1e-12);
}

TEST_CASE("construction gates: truncation, indices, classes") {
    EquationClass cls = parse_class_spec("one:-1:0");
    CHECK_THROWS_AS(make_coherent(cls, 0, {3.0, 0.0}, 5),
                    TruncationInsufficient);
    CHECK_THROWS_AS(make_coherent(cls, -1, {1.0, 0.0}, 20), IndexError);
    CHECK_THROWS_AS(make_coherent(cls, 0, {1.0, 0.0}, 1), ParameterOutOfRange);
    CHECK_THROWS_AS(make_coherent(parse_class_spec("s2:-7:1"), 0, {1.0, 0.0}, 20),
                    UnsupportedClass);
    CHECK_THROWS_AS(make_coherent(parse_class_spec("s2-1:-3:4"), 0, {1.0, 0.0}, 20),
                    UnsupportedClass);
    CHECK_THROWS_AS(make_coherent(parse_class_spec("s2+1:-4:0"), 0, {1.0, 0.0}, 20),
                    UnsupportedClass);
}

TEST_CASE("radial measures: closed form and frozen moments") {
    EquationClass herm = parse_class_spec("one:-2:0");
    RadialMeasure ma = radial_measure(herm, 0);
    CHECK(ma.density(1.5) == doctest::Approx(2.0 * 1.5 / 2.0).epsilon(1e-14));

    // Pochhammer branch, cc = 2: moments int g(r) r^{2n} dr = n! (n+1)!.
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    RadialMeasure mb = radial_measure(leg, 0);
    CHECK(mb.density(0.0) == 0.0);
    Interval iv{ExtendedReal{0.0}, ExtendedReal::inf()};
    double expected[4] = {1.0, 2.0, 12.0, 144.0};
    for (int n = 0; n <= 3; ++n) {
        QuadResult mom = integrate(
            [&](const QuadPoint& q) {
                return mb.density(q.s) * std::pow(q.s, 2 * n);
            },
            iv);
        CHECK(mom.value == doctest::Approx(expected[n]).epsilon(1e-7));
    }
}

TEST_CASE("resolution of identity diagonals are unity") {
    EquationClass herm = parse_class_spec("one:-2:0");
    std::vector<double> da = resolution_diagonals(herm, 0, 6);
    REQUIRE(da.size() == 6);
    for (double d : da) CHECK(d == doctest::Approx(1.0).epsilon(1e-8));

    EquationClass lag = parse_class_spec("s:-1:1");
    CHECK(identity_resolution_check(lag, 1, 6) < 1e-8);

    EquationClass leg = parse_class_spec("1-s2:-2:0");
    CHECK(identity_resolution_check(leg, 0, 6) < 1e-4);

    CHECK_THROWS_AS(resolution_diagonals(herm, 0, 0), ParameterOutOfRange);
    CHECK_THROWS_AS(resolution_diagonals(herm, 0, 61), ParameterOutOfRange);
}
