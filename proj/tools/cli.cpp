#include "cli.hpp"

#include "report.hpp"
#include "suites.hpp"

#include "parabose/cgc_closed.hpp"
#include "parabose/genfun.hpp"
#include "parabose/osp_rep.hpp"
#include "parabose/wavefun.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace parabose {

namespace {

// Parse failures detected after CLI11 has accepted the tokens.
struct ParseFailure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Rational parse_flag(const std::string &name, const std::string &text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument &e) {
        throw ParseFailure("--" + name + ": " + e.what());
    }
}

void require_rep(const RepLabel &r, const std::string &which) {
    if (r.mu <= Rational(-1, 2)) throw DomainError(which + " must exceed -1/2");
}

std::string shortest(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    // Prefer the shortest decimal that reads back to the same double.
    for (int p = 1; p <= 17; ++p) {
        std::ostringstream t;
        t << std::setprecision(p) << v;
        if (std::stod(t.str()) == v) return t.str();
    }
    return s.str();
}

nlohmann::json poly_json(const DensePoly<double> &p) {
    nlohmann::json a = nlohmann::json::array();
    for (double v : p.c) a.push_back(v);
    return a;
}

nlohmann::json bipoly_json(const BiPoly<double> &p) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < p.nx(); ++i)
        for (std::size_t k = 0; k < p.ny(); ++k)
            if (p.c[i][k] != 0) a.push_back({{"x", i}, {"y", k}, {"coeff", p.c[i][k]}});
    return a;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty())
        out << text;
    else
        write_file_atomic(path, text);
}

struct CgcFlags {
    std::string mu1 = "1/2", mu2 = "1/2", method = "oracle", format = "json", out;
    int eps1 = 1, eps2 = 1;
    long emax = 4;
};

int cmd_cgc(const CgcFlags &f, std::ostream &out) {
    const RepLabel r1{parse_flag("mu1", f.mu1), f.eps1}, r2{parse_flag("mu2", f.mu2), f.eps2};
    require_rep(r1, "mu1");
    require_rep(r2, "mu2");
    CgcTable t;
    if (f.method == "oracle") {
        t = oracle_cgc(r1, r2, f.emax);
    } else {
        if (r1.mu <= 0 || r2.mu <= 0) throw DomainError("closed method requires mu1, mu2 > 0");
        t = closed_cgc_table(r1, r2, f.emax);
        for (long E = 0; E <= f.emax; ++E)
            for (long n1 = 0; n1 <= E; ++n1) t.M[E].col(n1) *= closed_column_sign(n1, E - n1);
        t.phase_convention = "closed form with column sign (-1)^{n1(n1-1)/2 + n1 n2}; equals the oracle up to "
                             "one sign per coupled row";
    }
    if (f.format == "csv") {
        std::ostringstream s;
        s << "# " << t.phase_convention << "\n";
        s << "E,n12,j,n1,n2,value\n";
        for (long E = 0; E <= f.emax; ++E)
            for (long j = 0; j <= E; ++j)
                for (long n1 = 0; n1 <= E; ++n1)
                    s << E << ',' << E - j << ',' << j << ',' << n1 << ',' << E - n1 << ','
                      << shortest(t.M[E](j, n1)) << "\n";
        emit(s.str(), f.out, out);
        return kExitOk;
    }
    Report r;
    r.command = "cgc";
    r.params = {{"mu1", rational_json(r1.mu)}, {"mu2", rational_json(r2.mu)}, {"eps1", r1.eps},
                {"eps2", r2.eps},              {"emax", f.emax},             {"method", f.method}};
    nlohmann::json levels = nlohmann::json::array();
    for (long E = 0; E <= f.emax; ++E) {
        nlohmann::json rows = nlohmann::json::array();
        for (long j = 0; j <= E; ++j) {
            nlohmann::json row = nlohmann::json::array();
            for (long n1 = 0; n1 <= E; ++n1) row.push_back(t.M[E](j, n1));
            rows.push_back(std::move(row));
        }
        levels.push_back({{"E", E}, {"rows", std::move(rows)}});
    }
    r.results["phase_convention"] = t.phase_convention;
    r.results["layout"] = "rows[j][n1] = <n1, E-n1 | n12 = E-j, j>";
    r.results["levels"] = std::move(levels);
    r.checks.push_back({"unitarity ||M^T M - I||_inf", unitarity_defect(t), 1e-10, ""});
    emit(r.to_json().dump(2) + "\n", f.out, out);
    return kExitOk;
}

struct VerifyFlags {
    std::string suite = "all", out;
    std::vector<std::string> mu_grid;
    long max_level = 8;
};

int cmd_verify(const VerifyFlags &f, std::ostream &out, std::ostream &err) {
    SuiteOptions opt;
    if (!f.mu_grid.empty()) {
        opt.mu_grid.clear();
        for (const auto &m : f.mu_grid) {
            const Rational v = parse_flag("mu-grid", m);
            if (v <= 0) throw DomainError("--mu-grid entries must be positive");
            opt.mu_grid.push_back(v);
        }
    }
    opt.max_level = f.max_level;
    const Report r = run_suite(f.suite, opt);
    for (const auto &c : r.checks)
        err << (c.pass() ? "[pass] " : "[FAIL] ") << c.name << ": residual " << c.residual << " (tol " << c.tolerance
            << ")\n";
    err << r.erratum_findings.size() << " erratum finding(s)\n";
    emit(r.to_json().dump(2) + "\n", f.out, out);
    return r.pass() ? kExitOk : kExitResidual;
}

struct GenfunFlags {
    std::string mu1 = "1/2", mu2 = "1/2", emit = "coeffs", out;
    long n12 = 0, j = 0;
    int eps1 = 1, eps2 = 1;
};

int cmd_genfun(const GenfunFlags &f, std::ostream &out) {
    const GenFunCase c{f.n12, f.j, RepLabel{parse_flag("mu1", f.mu1), f.eps1}, RepLabel{parse_flag("mu2", f.mu2), f.eps2}};
    c.validate();
    Report r;
    r.command = "genfun";
    r.params = {{"n12", c.n12},  {"j", c.j},       {"mu1", rational_json(c.r1.mu)}, {"mu2", rational_json(c.r2.mu)},
                {"eps1", c.r1.eps}, {"eps2", c.r2.eps}, {"emit", f.emit}};
    if (f.emit == "coeffs") {
        const auto lhs = genfun_lhs_coeffs(c);
        const auto rhs = genfun_rhs_coeffs(c);
        const auto m = compare_matched(lhs, rhs);
        r.results["coefficients"] = poly_json(lhs);
        r.results["closed_form_coefficients"] = poly_json(rhs);
        r.results["absorbed_constant"] = m.absorbed_constant;
        r.checks.push_back({"series vs closed form", m.residual, 1e-10, ""});
    } else {
        const auto form = hypergeom_sum_form(c);
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &t : form.terms)
            terms.push_back({{"a", rational_json(t.a)},
                             {"b", rational_json(t.b)},
                             {"c", rational_json(t.c)},
                             {"scale", rational_json(t.scale)},
                             {"s_power", t.s_shift}});
        r.results["argument"] = "-s^2";
        r.results["outer_factor"] = "(s^2+1)^" + std::to_string(c.n12 / 2);
        r.results["terms"] = std::move(terms);
        nlohmann::json bracket = nlohmann::json::array();
        for (const auto &v : hypergeom_sum(c).c) bracket.push_back(rational_json(v));
        r.results["bracket_coefficients"] = std::move(bracket);
    }
    emit(r.to_json().dump(2) + "\n", f.out, out);
    return r.pass() ? kExitOk : kExitResidual;
}

struct WavefunFlags {
    std::string mu = "1/2", mu1 = "1/2", mu2 = "1/2", out;
    long n = -1, n12 = -1, j = 0;
};

int cmd_wavefun(const WavefunFlags &f, std::ostream &out) {
    Report r;
    r.command = "wavefun";
    if (f.n12 >= 0) {
        const Rational m1 = parse_flag("mu1", f.mu1), m2 = parse_flag("mu2", f.mu2);
        if (m1 <= 0 || m2 <= 0) throw DomainError("mu1, mu2 must be positive");
        const auto psi = coupled_psi(f.n12, f.j, m1, m2);
        r.params = {{"n12", f.n12}, {"j", f.j}, {"mu1", rational_json(m1)}, {"mu2", rational_json(m2)}};
        r.results["gaussian"] = "exp(-(x^2+y^2)/2)";
        r.results["terms"] = bipoly_json(psi.poly);
    } else {
        if (f.n < 0) throw ParseFailure("wavefun needs --n (one dimension) or --n12 (coupled)");
        const Rational mu = parse_flag("mu", f.mu);
        if (mu <= Rational(-1, 2)) throw DomainError("mu must exceed -1/2");
        const auto p = psi1d(f.n, mu);
        r.params = {{"n", f.n}, {"mu", rational_json(mu)}};
        r.results["gaussian"] = "exp(-x^2/2)";
        r.results["coefficients"] = poly_json(p.poly);
    }
    emit(r.to_json().dump(2) + "\n", f.out, out);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"osp(1|2) Clebsch-Gordan coefficients and generating-function checks"};
    app.require_subcommand(1);
    const std::vector<int> eps_values{1, -1};

    CgcFlags cg;
    auto *cgc = app.add_subcommand("cgc", "CGC tables per energy level");
    cgc->add_option("--mu1", cg.mu1, "first representation parameter p/q");
    cgc->add_option("--mu2", cg.mu2, "second representation parameter p/q");
    cgc->add_option("--eps1", cg.eps1)->check(CLI::IsMember(eps_values));
    cgc->add_option("--eps2", cg.eps2)->check(CLI::IsMember(eps_values));
    cgc->add_option("--emax", cg.emax, "highest energy level")->check(CLI::Range(0, 64));
    cgc->add_option("--method", cg.method)->check(CLI::IsMember({"oracle", "closed"}));
    cgc->add_option("--format", cg.format)->check(CLI::IsMember({"json", "csv"}));
    cgc->add_option("--out", cg.out, "output file (default stdout)");

    VerifyFlags vf;
    auto *verify = app.add_subcommand("verify", "run an invariant sweep and write a JSON report");
    verify->add_option("--suite", vf.suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--mu-grid", vf.mu_grid, "comma-separated p/q values")->delimiter(',');
    verify->add_option("--max-level", vf.max_level)->check(CLI::Range(0, 16));
    verify->add_option("--out", vf.out, "report file (default stdout)");

    GenfunFlags gf;
    auto *genfun = app.add_subcommand("genfun", "generating polynomial of one coupled row");
    genfun->add_option("--n12", gf.n12)->check(CLI::Range(0, 64));
    genfun->add_option("--j", gf.j)->check(CLI::Range(0, 64));
    genfun->add_option("--mu1", gf.mu1);
    genfun->add_option("--mu2", gf.mu2);
    genfun->add_option("--eps1", gf.eps1)->check(CLI::IsMember(eps_values));
    genfun->add_option("--eps2", gf.eps2)->check(CLI::IsMember(eps_values));
    genfun->add_option("--emit", gf.emit)->check(CLI::IsMember({"coeffs", "closed-form"}));
    genfun->add_option("--out", gf.out);

    WavefunFlags wf;
    auto *wavefun = app.add_subcommand("wavefun", "polynomial coefficients of psi_n or the coupled Psi");
    wavefun->add_option("--n", wf.n, "one-dimensional level")->check(CLI::Range(0, 64));
    wavefun->add_option("--mu", wf.mu);
    wavefun->add_option("--n12", wf.n12, "coupled radial label")->check(CLI::Range(0, 32));
    wavefun->add_option("--j", wf.j)->check(CLI::Range(0, 32));
    wavefun->add_option("--mu1", wf.mu1);
    wavefun->add_option("--mu2", wf.mu2);
    wavefun->add_option("--out", wf.out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*cgc) return cmd_cgc(cg, out);
        if (*verify) return cmd_verify(vf, out, err);
        if (*genfun) return cmd_genfun(gf, out);
        return cmd_wavefun(wf, out);
    } catch (const ParseFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

} // namespace parabose
