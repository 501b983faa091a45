#include "hypoly/eqclass.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypoly {

namespace {

double require_inside(const EquationClass& cls, double s) {
    if (!cls.interval.contains(s)) {
        std::ostringstream os;
        os << "s = " << s << " is outside the orthogonality interval of "
           << cls.spec_string();
        throw DomainError(os.str());
    }
    return s;
}

// log(1 + s^2) without overflowing s^2.
double log_one_plus_sq(double s) {
    double as = std::fabs(s);
    if (as > 1e8) return 2.0 * std::log(as) + std::log1p(1.0 / (as * as));
    return std::log1p(as * as);
}

} // namespace

const char* to_string(SigmaKind kind) {
    switch (kind) {
        case SigmaKind::One: return "one";
        case SigmaKind::S: return "s";
        case SigmaKind::OneMinusS2: return "1-s2";
        case SigmaKind::S2MinusOne: return "s2-1";
        case SigmaKind::S2: return "s2";
        case SigmaKind::S2PlusOne: return "s2+1";
    }
    return "?";
}

SigmaKind parse_sigma_kind(const std::string& token) {
    if (token == "one") return SigmaKind::One;
    if (token == "s") return SigmaKind::S;
    if (token == "1-s2") return SigmaKind::OneMinusS2;
    if (token == "s2-1") return SigmaKind::S2MinusOne;
    if (token == "s2") return SigmaKind::S2;
    if (token == "s2+1") return SigmaKind::S2PlusOne;
    throw ParameterOutOfRange("unknown class kind '" + token +
                              "' (expected one, s, 1-s2, s2-1, s2, s2+1)");
}

double EquationClass::kappa(double s) const {
    double sg = sigma(s);
    if (!(sg > 0.0)) {
        std::ostringstream os;
        os << "kappa undefined at s = " << s << ": sigma(s) = " << sg << " <= 0";
        throw DomainError(os.str());
    }
    return std::sqrt(sg);
}

double EquationClass::log_weight(double s) const {
    require_inside(*this, s);
    return log_weight(s, s - interval.a.v, interval.b.v - s);
}

double EquationClass::log_weight(double s, double dist_a, double dist_b) const {
    switch (kind) {
        case SigmaKind::One:
            // rho = exp(alpha s^2/2 + beta s)
            return 0.5 * alpha * s * s + beta * s;
        case SigmaKind::S:
            // rho = s^(beta-1) exp(alpha s), s = dist_a
            return (beta - 1.0) * std::log(dist_a) + alpha * s;
        case SigmaKind::OneMinusS2:
            // rho = (1+s)^p (1-s)^q, p = -(alpha-beta)/2 - 1, q = -(alpha+beta)/2 - 1
            return (-(alpha - beta) / 2.0 - 1.0) * std::log(dist_a) +
                   (-(alpha + beta) / 2.0 - 1.0) * std::log(dist_b);
        case SigmaKind::S2MinusOne:
            // rho = (s+1)^p (s-1)^q, p = (alpha-beta)/2 - 1, q = (alpha+beta)/2 - 1
            return ((alpha - beta) / 2.0 - 1.0) * std::log(s + 1.0) +
                   ((alpha + beta) / 2.0 - 1.0) * std::log(dist_a);
        case SigmaKind::S2:
            // rho = s^(alpha-2) exp(-beta/s)
            return (alpha - 2.0) * std::log(dist_a) - beta / s;
        case SigmaKind::S2PlusOne:
            // rho = (1+s^2)^(alpha/2-1) exp(beta atan s)
            return (alpha / 2.0 - 1.0) * log_one_plus_sq(s) + beta * std::atan(s);
    }
    return 0.0;
}

double EquationClass::log_sigma(double s, double dist_a, double dist_b) const {
    switch (kind) {
        case SigmaKind::One: return 0.0;
        case SigmaKind::S: return std::log(dist_a);
        case SigmaKind::OneMinusS2: return std::log(dist_a) + std::log(dist_b);
        case SigmaKind::S2MinusOne: return std::log(dist_a) + std::log(s + 1.0);
        case SigmaKind::S2: return 2.0 * std::log(dist_a);
        case SigmaKind::S2PlusOne: return log_one_plus_sq(s);
    }
    return 0.0;
}

double EquationClass::weight(double s) const {
    return std::exp(log_weight(s));
}

double EquationClass::weight_m(int m, double s) const {
    if (m < 0) throw IndexError("weight_m requires m >= 0");
    require_inside(*this, s);
    double ls = log_sigma(s, s - interval.a.v, interval.b.v - s);
    return std::exp(log_weight(s, s - interval.a.v, interval.b.v - s) +
                    static_cast<double>(m) * ls);
}

double EquationClass::eigenvalue(int l) const {
    if (l < 0) throw IndexError("eigenvalue requires l >= 0");
    double dl = static_cast<double>(l);
    return -sig2 * dl * (dl - 1.0) - alpha * dl;
}

Cutoff EquationClass::cutoff() const {
    switch (kind) {
        case SigmaKind::One:
        case SigmaKind::S:
        case SigmaKind::OneMinusS2:
            return Cutoff{ExtendedReal::inf()};
        default:
            return Cutoff{ExtendedReal{(1.0 - alpha) / 2.0}};
    }
}

std::string EquationClass::spec_string() const {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%s:%.17g:%.17g", to_string(kind), alpha, beta);
    return buf;
}

EquationClass validate(SigmaKind kind, double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta))
        throw ParameterOutOfRange("alpha and beta must be finite");

    auto fail = [&](const char* constraint) {
        std::ostringstream os;
        os << "class " << to_string(kind) << " requires " << constraint
           << "; got alpha = " << alpha << ", beta = " << beta;
        throw ParameterOutOfRange(os.str());
    };

    EquationClass cls{};
    cls.kind = kind;
    cls.alpha = alpha;
    cls.beta = beta;

    switch (kind) {
        case SigmaKind::One:
            if (!(alpha < 0.0)) fail("alpha < 0");
            cls.sig2 = 0.0; cls.sig1 = 0.0; cls.sig0 = 1.0;
            cls.interval = {ExtendedReal::neg_inf(), ExtendedReal::inf()};
            break;
        case SigmaKind::S:
            if (!(alpha < 0.0 && beta > 0.0)) fail("alpha < 0 and beta > 0");
            cls.sig2 = 0.0; cls.sig1 = 1.0; cls.sig0 = 0.0;
            cls.interval = {ExtendedReal{0.0}, ExtendedReal::inf()};
            break;
        case SigmaKind::OneMinusS2:
            if (!(alpha < beta && beta < -alpha)) fail("alpha < beta < -alpha");
            cls.sig2 = -1.0; cls.sig1 = 0.0; cls.sig0 = 1.0;
            cls.interval = {ExtendedReal{-1.0}, ExtendedReal{1.0}};
            break;
        case SigmaKind::S2MinusOne:
            if (!(-beta < alpha && alpha < 0.0)) fail("-beta < alpha < 0");
            cls.sig2 = 1.0; cls.sig1 = 0.0; cls.sig0 = -1.0;
            cls.interval = {ExtendedReal{1.0}, ExtendedReal::inf()};
            break;
        case SigmaKind::S2:
            if (!(alpha < 0.0 && beta > 0.0)) fail("alpha < 0 and beta > 0");
            cls.sig2 = 1.0; cls.sig1 = 0.0; cls.sig0 = 0.0;
            cls.interval = {ExtendedReal{0.0}, ExtendedReal::inf()};
            break;
        case SigmaKind::S2PlusOne:
            if (!(alpha < 0.0)) fail("alpha < 0");
            cls.sig2 = 1.0; cls.sig1 = 0.0; cls.sig0 = 1.0;
            cls.interval = {ExtendedReal::neg_inf(), ExtendedReal::inf()};
            break;
    }
    return cls;
}

EquationClass parse_class_spec(const std::string& spec) {
    auto p1 = spec.find(':');
    auto p2 = (p1 == std::string::npos) ? std::string::npos : spec.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw ParameterOutOfRange("class spec must be <kind>:<alpha>:<beta>, got '" +
                                  spec + "'");
    SigmaKind kind = parse_sigma_kind(spec.substr(0, p1));
    std::string sa = spec.substr(p1 + 1, p2 - p1 - 1);
    std::string sb = spec.substr(p2 + 1);
    double alpha, beta;
    try {
        std::size_t pa = 0, pb = 0;
        alpha = std::stod(sa, &pa);
        beta = std::stod(sb, &pb);
        if (pa != sa.size() || pb != sb.size())
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw ParameterOutOfRange("could not parse numbers in class spec '" + spec + "'");
    }
    return validate(kind, alpha, beta);
}

} // namespace hypoly
