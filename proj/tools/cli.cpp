#include "cli.hpp"

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypoly/algebra.hpp"
#include "hypoly/coherent.hpp"
#include "hypoly/eqclass.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/polyalg.hpp"
#include "hypoly/specfun.hpp"
#include "hypoly/suites.hpp"

namespace hypoly::cli {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

using Value = std::variant<std::string, double, int, bool>;

struct Field {
    std::string key;
    Value val;
};

std::string json_value(const Value& v) {
    if (const auto* s = std::get_if<std::string>(&v))
        return nlohmann::json(*s).dump();
    if (const auto* d = std::get_if<double>(&v)) return fmt17(*d);
    if (const auto* i = std::get_if<int>(&v)) return std::to_string(*i);
    return std::get<bool>(v) ? "true" : "false";
}

std::string csv_value(const Value& v) {
    std::string plain;
    if (const auto* s = std::get_if<std::string>(&v))
        plain = *s;
    else if (const auto* d = std::get_if<double>(&v))
        plain = fmt17(*d);
    else if (const auto* i = std::get_if<int>(&v))
        plain = std::to_string(*i);
    else
        plain = std::get<bool>(v) ? "true" : "false";
    if (plain.find_first_of(",\"\n") == std::string::npos) return plain;
    std::string quoted = "\"";
    for (char c : plain) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

/// Emits flat records as JSON-lines (default) or CSV (header repeated
/// whenever the record shape changes).
class RowWriter {
  public:
    RowWriter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

    void row(std::initializer_list<Field> fields) {
        if (csv_) {
            std::string header;
            for (const Field& f : fields) {
                if (!header.empty()) header += ',';
                header += f.key;
            }
            if (header != last_header_) {
                out_ << header << '\n';
                last_header_ = header;
            }
            bool first = true;
            for (const Field& f : fields) {
                if (!first) out_ << ',';
                first = false;
                out_ << csv_value(f.val);
            }
            out_ << '\n';
        } else {
            out_ << '{';
            bool first = true;
            for (const Field& f : fields) {
                if (!first) out_ << ", ";
                first = false;
                out_ << nlohmann::json(f.key).dump() << ": " << json_value(f.val);
            }
            out_ << "}\n";
        }
    }

  private:
    std::ostream& out_;
    bool csv_;
    std::string last_header_;
};

int capped_lmax(const EquationClass& cls, int want) {
    int l = -1;
    while (l + 1 <= want && cls.cutoff().allows(l + 1)) ++l;
    return l;
}

std::complex<double> parse_z(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ParameterOutOfRange("--z expects 're,im' (e.g. --z 1,0)");
    try {
        std::size_t used = 0;
        double re = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("re");
        std::string imtext = text.substr(comma + 1);
        double im = std::stod(imtext, &used);
        if (used != imtext.size()) throw std::invalid_argument("im");
        return {re, im};
    } catch (const std::logic_error&) {
        throw ParameterOutOfRange("--z expects 're,im' (e.g. --z 1,0)");
    }
}

std::string extended_str(const ExtendedReal& x) {
    if (!x.is_finite()) return x.v > 0 ? "inf" : "-inf";
    return fmt17(x.v);
}

int cmd_eval(const std::string& spec, int l, int m,
             const std::vector<double>& svals, bool csv, std::ostream& out) {
    EquationClass cls = parse_class_spec(spec);
    LadderRep rep = build_psi_lm(cls, l, m);
    NormalizedRep nrep = normalized(cls, l, m);
    RowWriter w(out, csv);
    for (double s : svals) {
        double v = eval_rep(cls, rep, s);
        w.row({{"class", cls.spec_string()},
               {"l", l},
               {"m", m},
               {"s", s},
               {"psi", v},
               {"psi_normalized", nrep.scale * v}});
    }
    return 0;
}

int cmd_tabulate(const std::string& spec, const std::string& what, int l_max,
                 int m, bool csv, std::ostream& out) {
    EquationClass cls = parse_class_spec(spec);
    if (l_max < 0) throw ParameterOutOfRange("--lmax must be >= 0");
    int top = capped_lmax(cls, l_max);
    RowWriter w(out, csv);
    std::string cs = cls.spec_string();

    if (what == "eigenvalues") {
        for (int l = 0; l <= top; ++l)
            w.row({{"class", cs}, {"l", l}, {"lambda", cls.eigenvalue(l)}});
    } else if (what == "coeffs") {
        for (int l = 0; l <= top; ++l) {
            Polynomial p = build_psi(cls, l);
            for (int k = 0; k <= l; ++k)
                w.row({{"class", cs}, {"l", l}, {"k", k}, {"coeff", p.coeff(k)}});
        }
    } else if (what == "norms") {
        if (m > top)
            throw ParameterOutOfRange("--m exceeds the largest admissible l");
        NormTable t = build_norm_table(cls, m, top);
        for (const auto& [l, value] : t.entries)
            w.row({{"class", cs},
                   {"l", l},
                   {"m", m},
                   {"norm", value},
                   {"path", std::string("quadrature")}});
    } else { // recurrence
        for (int l = 0; l + 1 <= top; ++l) {
            ThreeTerm tt = three_term_coefficients(cls, l);
            w.row({{"class", cs}, {"l", l}, {"b", tt.b}, {"g", tt.g}});
        }
    }
    return 0;
}

int cmd_verify(const std::string& spec, const std::string& suite, int l_max,
               bool json, bool csv, std::ostream& out) {
    EquationClass cls = parse_class_spec(spec);
    SuiteOptions opt;
    opt.l_max = l_max;
    if (const char* env = std::getenv("HYPOLY_TOL")) {
        char* end = nullptr;
        double t = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(t > 0.0))
            throw ParameterOutOfRange(
                "HYPOLY_TOL must be a positive number, got '" +
                std::string(env) + "'");
        opt.tol_override = t;
    }

    std::vector<Report> reports = run_suites(cls, suite, opt);
    bool all_pass = true;
    int checks = 0, failed = 0;
    RowWriter w(out, csv);
    for (const Report& rep : reports)
        for (const IdentityCheck& c : rep.checks) {
            ++checks;
            if (!c.pass) {
                ++failed;
                all_pass = false;
            }
            if (json || csv) {
                w.row({{"class", cls.spec_string()},
                       {"suite", rep.suite},
                       {"identity", c.identity},
                       {"max_residual", c.max_residual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass},
                       {"note", c.note}});
            } else {
                char res[32], tol[32];
                std::snprintf(res, sizeof res, "%.3e", c.max_residual);
                std::snprintf(tol, sizeof tol, "%.3e", c.tolerance);
                out << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << ": "
                    << c.identity << "  (residual " << res << ", tol " << tol
                    << ')';
                if (!c.note.empty()) out << "  [" << c.note << ']';
                out << '\n';
            }
        }
    if (!json && !csv)
        out << "verify " << cls.spec_string() << ": " << checks << " checks, "
            << failed << " failed\n";
    return all_pass ? 0 : 1;
}

int cmd_coherent(const std::string& spec, int m, const std::string& ztext,
                 int n_trunc, int resolution, bool csv, std::ostream& out) {
    EquationClass cls = parse_class_spec(spec);
    std::complex<double> z = parse_z(ztext);
    CoherentState state = make_coherent(cls, m, z, n_trunc);
    NormCheck nc = norm_check(state);
    RowWriter w(out, csv);
    w.row({{"class", cls.spec_string()},
           {"m", m},
           {"z_re", z.real()},
           {"z_im", z.imag()},
           {"ntrunc", n_trunc},
           {"eigen_residual", eigen_check(state)},
           {"norm_computed", nc.computed},
           {"norm_expected", nc.expected}});
    if (resolution > 0) {
        std::vector<double> diag = resolution_diagonals(cls, m, resolution);
        for (std::size_t n = 0; n < diag.size(); ++n)
            w.row({{"n", static_cast<int>(n)}, {"diagonal", diag[n]}});
    }
    return 0;
}

int cmd_info(const std::string& spec, bool csv, std::ostream& out) {
    EquationClass cls = parse_class_spec(spec);
    KNormalForm kf = k_normal_form(cls);
    bool shiftable = cls.kind == SigmaKind::One || cls.kind == SigmaKind::S ||
                     cls.kind == SigmaKind::OneMinusS2;
    RowWriter w(out, csv);
    w.row({{"class", cls.spec_string()},
           {"kind", std::string(to_string(cls.kind))},
           {"alpha", cls.alpha},
           {"beta", cls.beta},
           {"sigma_0", cls.sig0},
           {"sigma_1", cls.sig1},
           {"sigma_2", cls.sig2},
           {"interval_a", extended_str(cls.interval.a)},
           {"interval_b", extended_str(cls.interval.b)},
           {"cutoff", extended_str(cls.cutoff().value)},
           {"algebra", std::string(to_string(kf.kind))},
           {"k0_offset", kf.k0_offset},
           {"shift_matrices", shiftable},
           {"coherent_states", shiftable}});
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"hypergeometric-type orthogonal polynomial systems: "
                 "evaluation, tabulation, and identity verification"};
    app.require_subcommand(1);
    app.footer("Class specs are '<kind>:<alpha>:<beta>' with kind one of\n"
               "  one, s, 1-s2, s2-1, s2, s2+1\n"
               "e.g. '1-s2:-2:0' (Legendre) or 's:-1:1' (Laguerre).\n"
               "The environment variable HYPOLY_TOL (a positive number)\n"
               "overrides every default residual tolerance in `verify`.");

    std::string spec, what = "eigenvalues", suite = "all", ztext = "1,0";
    int l = 0, m = 0, l_max = 8, n_trunc = 80, resolution = 0;
    std::vector<double> svals;
    bool csv = false, json = false;

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate Psi_{l,m} and its unit-norm companion at points s");
    eval->add_option("class", spec, "class spec <kind>:<alpha>:<beta>")
        ->required();
    eval->add_option("-l,--l", l, "degree l")->required();
    eval->add_option("-m,--m", m, "derivative level m (default 0)");
    eval->add_option("-s,--s", svals, "evaluation points (repeatable)")
        ->required();
    eval->add_flag("--csv", csv, "CSV instead of JSON-lines");

    CLI::App* tab = app.add_subcommand(
        "tabulate", "tabulate coefficients, norms, eigenvalues, or the "
                    "three-term recurrence");
    tab->add_option("class", spec, "class spec <kind>:<alpha>:<beta>")
        ->required();
    tab->add_option("--what", what, "one of coeffs, norms, eigenvalues, "
                                    "recurrence (default eigenvalues)")
        ->check(CLI::IsMember({"coeffs", "norms", "eigenvalues", "recurrence"}));
    tab->add_option("--lmax", l_max, "largest degree (default 8; capped at "
                                     "the class cutoff)");
    tab->add_option("-m,--m", m, "level m for --what norms (default 0)");
    tab->add_flag("--csv", csv, "CSV instead of JSON-lines");

    CLI::App* ver = app.add_subcommand(
        "verify", "run identity suites and report residuals");
    ver->add_option("class", spec, "class spec <kind>:<alpha>:<beta>")
        ->required();
    ver->add_option("--suite", suite,
                    "ode, orthogonality, recurrence, ladder, algebra, shift, "
                    "casimir, coherent, or all (default all)")
        ->check(CLI::IsMember({"ode", "orthogonality", "recurrence", "ladder",
                               "algebra", "shift", "casimir", "coherent",
                               "all"}));
    ver->add_option("--lmax", l_max, "largest degree to test (default 8)");
    ver->add_flag("--json", json, "JSON-lines report instead of text");
    ver->add_flag("--csv", csv, "CSV report instead of text");

    CLI::App* coh = app.add_subcommand(
        "coherent", "build a coherent state and report its residuals");
    coh->add_option("class", spec, "class spec <kind>:<alpha>:<beta>")
        ->required();
    coh->add_option("-m,--m", m, "ladder level m (default 0)");
    coh->add_option("-z,--z", ztext, "eigenvalue as re,im (default 1,0)");
    coh->add_option("--ntrunc", n_trunc, "truncation length (default 80)");
    coh->add_option("--resolution", resolution,
                    "also print this many identity-resolution diagonals");
    coh->add_flag("--csv", csv, "CSV instead of JSON-lines");

    CLI::App* info = app.add_subcommand(
        "info", "class parameters, interval, cutoff, and algebra kind");
    info->add_option("class", spec, "class spec <kind>:<alpha>:<beta>")
        ->required();
    info->add_flag("--csv", csv, "CSV instead of JSON-lines");

    try {
        // CLI11 consumes the argument vector in reverse order.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return cmd_eval(spec, l, m, svals, csv, out);
        if (*tab) return cmd_tabulate(spec, what, l_max, m, csv, out);
        if (*ver) return cmd_verify(spec, suite, l_max, json, csv, out);
        if (*coh)
            return cmd_coherent(spec, m, ztext, n_trunc, resolution, csv, out);
        if (*info) return cmd_info(spec, csv, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace hypoly::cli
