#include <doctest.h>

#include <cmath>
#include <limits>

#include "hypoly/eqclass.hpp"
#include "hypoly/errors.hpp"
#include "test_grids.hpp"

using namespace hypoly;

TEST_CASE("extended reals order against finite values and infinities") {
    ExtendedReal inf = ExtendedReal::inf();
    ExtendedReal ninf = ExtendedReal::neg_inf();
    CHECK(ExtendedReal{3.0} < inf);
    CHECK(ninf < ExtendedReal{-1e308});
    CHECK(inf.is_finite() == false);
    CHECK(ExtendedReal{0.0}.is_finite());
    CHECK(Cutoff{inf}.allows(1000000));
    CHECK(Cutoff{ExtendedReal{4.0}}.allows(3));
    CHECK_FALSE(Cutoff{ExtendedReal{4.0}}.allows(4));
    CHECK(Cutoff{ExtendedReal{1.5}}.allows(1));
    CHECK_FALSE(Cutoff{ExtendedReal{1.5}}.allows(2));
}

TEST_CASE("open intervals exclude their endpoints") {
    Interval iv{ExtendedReal{-1.0}, ExtendedReal{1.0}};
    CHECK(iv.contains(0.0));
    CHECK(iv.contains(0.999999));
    CHECK_FALSE(iv.contains(1.0));
    CHECK_FALSE(iv.contains(-1.0));
    Interval half{ExtendedReal{0.0}, ExtendedReal::inf()};
    CHECK(half.contains(1e300));
    CHECK_FALSE(half.contains(0.0));
}

TEST_CASE("kind tokens round-trip") {
    for (const char* tok : {"one", "s", "1-s2", "s2-1", "s2", "s2+1"}) {
        SigmaKind k = parse_sigma_kind(tok);
        CHECK(std::string(to_string(k)) == tok);
    }
    CHECK_THROWS_AS(parse_sigma_kind("legendre"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_sigma_kind(""), ParameterOutOfRange);
}

TEST_CASE("class specs parse, validate, and round-trip") {
    for (const std::string& spec : testgrid::coverage_specs()) {
        EquationClass cls = parse_class_spec(spec);
        CHECK(cls.spec_string() == spec);
        CHECK(cls.alpha < 0.0);
    }
    CHECK_THROWS_AS(parse_class_spec("one:-2"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_class_spec("one:x:0"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_class_spec("one:-2:0:7"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_class_spec(""), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_class_spec("weird:-2:0"), ParameterOutOfRange);
}

TEST_CASE("admissibility constraints reject each boundary") {
    CHECK_THROWS_AS(validate(SigmaKind::One, 0.0, 0.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::One, 1.0, 0.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S, -1.0, 0.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S, -1.0, -2.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S, 0.0, 1.0), ParameterOutOfRange);
    // OneMinusS2 needs alpha < beta < -alpha.
    CHECK_THROWS_AS(validate(SigmaKind::OneMinusS2, -2.0, -2.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::OneMinusS2, -2.0, 2.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::OneMinusS2, -2.0, -3.0), ParameterOutOfRange);
    // S2MinusOne needs -beta < alpha < 0.
    CHECK_THROWS_AS(validate(SigmaKind::S2MinusOne, -3.0, 2.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S2MinusOne, 0.0, 5.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S2, -1.0, 0.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S2, 2.0, 1.0), ParameterOutOfRange);
    CHECK_THROWS_AS(validate(SigmaKind::S2PlusOne, 0.0, 0.0), ParameterOutOfRange);
    // NaN parameters are never admissible.
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(SigmaKind::One, nan, 0.0), ParameterOutOfRange);
}

TEST_CASE("sigma, tau, interval match the kind") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    CHECK(leg.sigma(0.5) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(leg.sigma_prime(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(leg.sigma_dd() == -2.0);
    CHECK(leg.tau(0.25) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(leg.interval.a.v == -1.0);
    CHECK(leg.interval.b.v == 1.0);

    EquationClass lag = parse_class_spec("s:-1:1");
    CHECK(lag.sigma(3.0) == 3.0);
    CHECK(lag.sigma_dd() == 0.0);
    CHECK(lag.interval.a.v == 0.0);
    CHECK_FALSE(lag.interval.b.is_finite());

    EquationClass bes = parse_class_spec("s2:-7:1");
    CHECK(bes.sigma(2.0) == 4.0);
    CHECK(bes.sigma_dd() == 2.0);

    EquationClass cau = parse_class_spec("s2+1:-4:1");
    CHECK(cau.sigma(2.0) == 5.0);
    CHECK_FALSE(cau.interval.a.is_finite());
    CHECK_FALSE(cau.interval.b.is_finite());
}

TEST_CASE("eigenvalues: lambda_1 = -alpha and closed forms") {
    for (const EquationClass& cls : testgrid::coverage_classes()) {
        CHECK(cls.eigenvalue(0) == 0.0);
        CHECK(cls.eigenvalue(1) == doctest::Approx(-cls.alpha).epsilon(1e-15));
    }
    EquationClass herm = parse_class_spec("one:-2:0");
    for (int l = 0; l <= 6; ++l)
        CHECK(herm.eigenvalue(l) == doctest::Approx(2.0 * l).epsilon(1e-15));
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    for (int l = 0; l <= 6; ++l)
        CHECK(leg.eigenvalue(l) == doctest::Approx(l * (l + 1.0)).epsilon(1e-15));
    EquationClass bes = parse_class_spec("s2:-7:1");
    for (int l = 0; l <= 6; ++l)
        CHECK(bes.eigenvalue(l) == doctest::Approx(l * (8.0 - l)).epsilon(1e-15));
}

TEST_CASE("cutoffs: infinite for sigma'' <= 0, (1-alpha)/2 otherwise") {
    CHECK_FALSE(parse_class_spec("one:-2:0").cutoff().value.is_finite());
    CHECK_FALSE(parse_class_spec("s:-2:3").cutoff().value.is_finite());
    CHECK_FALSE(parse_class_spec("1-s2:-3:1").cutoff().value.is_finite());
    CHECK(parse_class_spec("s2:-7:1").cutoff().value.v == 4.0);
    CHECK(parse_class_spec("s2-1:-2:3").cutoff().value.v == 1.5);
    CHECK(parse_class_spec("s2+1:-4:1").cutoff().value.v == 2.5);
    CHECK(parse_class_spec("s2:-7:1").cutoff().allows(3));
    CHECK_FALSE(parse_class_spec("s2:-7:1").cutoff().allows(4));
}

TEST_CASE("weights take their closed forms at interior points") {
    CHECK(parse_class_spec("one:-2:0").weight(1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(parse_class_spec("one:-1:1").weight(2.0) ==
          doctest::Approx(std::exp(-2.0 + 2.0)).epsilon(1e-14));
    CHECK(parse_class_spec("s:-1:1").weight(2.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(parse_class_spec("s:-2:3").weight(1.5) ==
          doctest::Approx(std::pow(1.5, 2.0) * std::exp(-3.0)).epsilon(1e-14));
    CHECK(parse_class_spec("1-s2:-2:0").weight(0.3) == doctest::Approx(1.0));
    CHECK(parse_class_spec("1-s2:-3:1").weight(0.5) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK(parse_class_spec("s2-1:-2:3").weight(2.0) ==
          doctest::Approx(std::pow(3.0, -3.5)).epsilon(1e-14));
    CHECK(parse_class_spec("s2:-7:1").weight(1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(parse_class_spec("s2+1:-4:1").weight(1.0) ==
          doctest::Approx(std::pow(2.0, -3.0) * std::exp(std::atan(1.0)))
              .epsilon(1e-14));
}

TEST_CASE("log_weight agrees with log(weight) and handles endpoint distances") {
    for (const EquationClass& cls : testgrid::coverage_classes()) {
        double a = cls.interval.a.v, b = cls.interval.b.v;
        double lo = cls.interval.a.is_finite() ? a + 0.125 : -2.0;
        double hi = cls.interval.b.is_finite() ? b - 0.125 : lo + 3.0;
        for (double s : {lo, 0.5 * (lo + hi), hi}) {
            double direct = std::log(cls.weight(s));
            CHECK(cls.log_weight(s) == doctest::Approx(direct).epsilon(1e-12));
            CHECK(cls.log_weight(s, s - a, b - s) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("weights make the equation self-adjoint: (sigma rho)' = tau rho") {
    for (const EquationClass& cls : testgrid::coverage_classes()) {
        double lo = cls.interval.a.is_finite() ? cls.interval.a.v + 0.25 : -1.5;
        double hi = cls.interval.b.is_finite() ? cls.interval.b.v - 0.25 : lo + 2.5;
        for (double s : {lo, 0.5 * (lo + hi), hi}) {
            double h = 1e-6;
            double num = (cls.sigma(s + h) * cls.weight(s + h) -
                          cls.sigma(s - h) * cls.weight(s - h)) /
                         (2.0 * h);
            double expect = cls.tau(s) * cls.weight(s);
            CHECK(num == doctest::Approx(expect)
                             .epsilon(1e-6 * (1.0 + std::fabs(expect))));
        }
    }
}

TEST_CASE("weight_m multiplies in sigma powers") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    CHECK(leg.weight_m(2, 0.5) == doctest::Approx(0.75 * 0.75).epsilon(1e-14));
    CHECK(leg.weight_m(0, 0.5) == doctest::Approx(leg.weight(0.5)));
    EquationClass lag = parse_class_spec("s:-1:1");
    CHECK(lag.weight_m(3, 2.0) ==
          doctest::Approx(8.0 * std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("kappa is the positive square root of sigma inside the interval") {
    EquationClass leg = parse_class_spec("1-s2:-2:0");
    CHECK(leg.kappa(0.6) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_THROWS_AS(leg.kappa(2.0), DomainError);
    EquationClass lag = parse_class_spec("s:-1:1");
    CHECK_THROWS_AS(lag.kappa(-1.0), DomainError);
    EquationClass hyp = parse_class_spec("s2-1:-2:3");
    CHECK(hyp.kappa(2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
}
