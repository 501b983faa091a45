#include "hypoly/specfun.hpp"

#include <cmath>
#include <sstream>

#include "hypoly/polyalg.hpp"
#include "hypoly/quad.hpp"

namespace hypoly {

LadderRep build_psi_lm(const EquationClass& cls, int l, int m) {
    if (m < 0 || m > l) {
        std::ostringstream os;
        os << "build_psi_lm requires 0 <= m <= l, got l = " << l << ", m = " << m;
        throw IndexError(os.str());
    }
    Polynomial p = build_psi(cls, l);
    for (int j = 0; j < m; ++j) p = p.derivative();
    return LadderRep{m, std::move(p)};
}

double eval_rep(const EquationClass& cls, const LadderRep& rep, double s) {
    double pv = rep.p.eval(s);
    if (rep.m == 0) return pv;
    double k = cls.kappa(s);
    return std::pow(k, static_cast<double>(rep.m)) * pv;
}

double norm(const EquationClass& cls, int l, int m, const QuadratureSpec& spec) {
    LadderRep rep = build_psi_lm(cls, l, m);
    double sq = inner_product(cls, rep, rep, spec);
    if (!(sq > 0.0)) {
        std::ostringstream os;
        os << "norm^2 of Psi_{" << l << "," << m << "} came out non-positive ("
           << sq << ")";
        throw ToleranceExceeded(os.str());
    }
    return std::sqrt(sq);
}

double norm(const EquationClass& cls, int l, int m) {
    return norm(cls, l, m, QuadratureSpec{});
}

double norm_via_ladder(const EquationClass& cls, int l, int m) {
    if (m < 0 || m > l) throw IndexError("norm_via_ladder requires 0 <= m <= l");
    double n = norm(cls, l, 0);
    for (int j = 0; j < m; ++j) {
        double gap = cls.eigenvalue(l) - cls.eigenvalue(j);
        n *= std::sqrt(gap);
    }
    return n;
}

NormalizedRep normalized(const EquationClass& cls, int l, int m) {
    LadderRep rep = build_psi_lm(cls, l, m);
    double scale = 1.0 / norm(cls, l, m);
    rep.p *= scale;
    return {std::move(rep), scale};
}

double NormTable::at(int l) const {
    auto it = entries.find(l);
    if (it == entries.end()) {
        std::ostringstream os;
        os << "no norm entry for l = " << l << " (table has l <= "
           << (entries.empty() ? -1 : entries.rbegin()->first) << ")";
        throw IndexError(os.str());
    }
    return it->second;
}

NormTable build_norm_table(const EquationClass& cls, int m, int l_max,
                           NormPath path) {
    if (l_max < m) throw IndexError("build_norm_table requires l_max >= m");
    NormTable t{cls, m, path, {}};
    for (int l = m; l <= l_max; ++l) {
        if (!cls.cutoff().allows(l)) break;
        t.entries[l] =
            (path == NormPath::Quadrature) ? norm(cls, l, m) : norm_via_ladder(cls, l, m);
    }
    return t;
}

} // namespace hypoly
