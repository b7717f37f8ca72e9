#include "suites.hpp"

#include "parabose/cgc_closed.hpp"
#include "parabose/genfun.hpp"
#include "parabose/orthopoly.hpp"
#include "parabose/osp_rep.hpp"
#include "parabose/su11.hpp"
#include "parabose/wavefun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace parabose {

namespace {

struct RepPair {
    RepLabel r1, r2;
};

std::vector<RepPair> rep_pairs(const SuiteOptions &opt, bool all_eps) {
    std::vector<RepPair> out;
    const std::vector<int> plus{1};
    const auto &eps = all_eps ? opt.eps_grid : plus;
    for (const auto &m1 : opt.mu_grid)
        for (const auto &m2 : opt.mu_grid)
            for (int e1 : eps)
                for (int e2 : eps) out.push_back({RepLabel{m1, e1}, RepLabel{m2, e2}});
    return out;
}

std::string label(const RepPair &p) {
    std::ostringstream s;
    s << "mu1=" << to_string(p.r1.mu) << " eps1=" << p.r1.eps << " mu2=" << to_string(p.r2.mu)
      << " eps2=" << p.r2.eps;
    return s.str();
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

// Max-reduction with the location of the worst case.
struct Worst {
    double value = 0;
    std::string where;
    std::mutex m;

    void offer(double v, const std::string &w) {
        std::lock_guard<std::mutex> lock(m);
        if (v > value || (v == value && (where.empty() || w < where))) {
            value = v;
            where = w;
        }
    }
};

} // namespace

std::vector<Rational> default_mu_grid() { return {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(3, 2)}; }
std::vector<Rational> default_l_grid() { return {Rational(1, 2), Rational(1), Rational(3, 2)}; }

unsigned suite_threads(unsigned requested) {
    unsigned cap = 0;
    if (const char *env = std::getenv("PARABOSE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) cap = static_cast<unsigned>(v);
    }
    unsigned n = requested ? requested : (cap ? cap : std::max(1u, std::thread::hardware_concurrency()));
    if (cap) n = std::min(n, cap);
    return std::max(1u, n);
}

void parallel_for(long n, unsigned threads, const std::function<void(long)> &fn) {
    const unsigned workers = std::min<unsigned>(suite_threads(threads), static_cast<unsigned>(std::max(1L, n)));
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (long i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

// ---- dual -1 Hahn ----

CheckResult check_dm1h_orthogonality(const std::vector<Rational> &grid, long nmax_N) {
    CheckResult c{"dual -1 Hahn orthogonality (exact)", 0, 0, ""};
    Rational worst = 0;
    long count = 0;
    for (const auto &eta : grid)
        for (const auto &xi : grid)
            for (long N = 0; N <= nmax_N; ++N) {
                const Dm1hData d = dm1h_data(eta, xi, N);
                const auto R = dual_m1_hahn_family(eta, xi, N, N);
                std::vector<std::vector<Rational>> vals(N + 1);
                for (long n = 0; n <= N; ++n)
                    for (const auto &y : d.grid) vals[n].push_back(R[n](y));
                for (long n = 0; n <= N; ++n)
                    for (long m = 0; m <= N; ++m) {
                        Rational s = 0;
                        for (long k = 0; k <= N; ++k) s += d.weights[k] * vals[n][k] * vals[m][k];
                        if (n == m) s -= dm1h_norm(n, d);
                        Rational a = abs(s);
                        if (a > worst) worst = a;
                        ++count;
                    }
            }
    c.residual = to_double(worst);
    c.detail = std::to_string(count) + " pairs (n, m), N <= " + std::to_string(nmax_N) + ", max residual " + to_string(worst);
    return c;
}

CheckResult check_dm1h_hyper_exact(const std::vector<Rational> &grid, long nmax_N) {
    CheckResult c{"recurrence vs 3F2 forms (exact)", 0, 0, ""};
    Rational worst = 0;
    long count = 0;
    bool parity_seen[2][2] = {{false, false}, {false, false}};
    for (const auto &eta : grid)
        for (const auto &xi : grid)
            for (long N = 0; N <= nmax_N; ++N) {
                const Dm1hData d = dm1h_data(eta, xi, N);
                const auto R = dual_m1_hahn_family(eta, xi, N, N);
                for (long n = 0; n <= N; ++n)
                    for (const auto &y : d.grid) {
                        Rational a = abs(R[n](y) - dual_m1_hahn_hyper<Rational>(n, y, eta, xi, N));
                        if (a > worst) worst = a;
                        parity_seen[n % 2][N % 2] = true;
                        ++count;
                    }
            }
    c.residual = to_double(worst);
    int branches = 0;
    for (auto &row : parity_seen)
        for (bool b : row) branches += b;
    c.detail = std::to_string(count) + " grid evaluations, " + std::to_string(branches) + " of 4 (n, N) parity branches";
    return c;
}

CheckResult check_dm1h_hyper_float(const std::vector<Rational> &grid, long nmax_N) {
    CheckResult c{"recurrence vs 3F2 forms (float, relative to condition scale)", 0, 1e-12, ""};
    for (const auto &eta : grid)
        for (const auto &xi : grid)
            for (long N = 0; N <= nmax_N; ++N) {
                const Dm1hData d = dm1h_data(eta, xi, N);
                const auto R = dual_m1_hahn_family(eta, xi, N, N);
                for (long n = 0; n <= N; ++n) {
                    const DensePoly<double> p = R[n].cast<double>();
                    for (const auto &yr : d.grid) {
                        const double y = to_double(yr);
                        double scale = 1, powy = 1, s = 0;
                        for (double v : p.c) {
                            s += std::abs(v) * powy;
                            powy *= std::abs(y);
                        }
                        scale = std::max(scale, s);
                        const double diff = std::abs(p(y) - dual_m1_hahn_hyper<double>(n, y, eta, xi, N));
                        c.residual = std::max(c.residual, diff / scale);
                    }
                }
            }
    return c;
}

// ---- CGC tables ----

CheckResult check_oracle_unitarity(const SuiteOptions &opt, long emax) {
    CheckResult c{"oracle CGC unitarity ||M^T M - I||_inf", 0, 1e-10, ""};
    const auto pairs = rep_pairs(opt, true);
    Worst w;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        w.offer(unitarity_defect(oracle_cgc(pairs[i].r1, pairs[i].r2, emax)), label(pairs[i]));
    });
    c.residual = w.value;
    c.detail = std::to_string(pairs.size()) + " representation pairs, E <= " + std::to_string(emax) +
               "; worst at " + w.where;
    return c;
}

namespace {

// Deviation of `closed` from c * `oracle` with c fixed at the largest oracle entry.
double row_deviation(const std::vector<double> &closed, const Eigen::MatrixXd &oracle, long row, double &constant) {
    long best = 0;
    for (long n = 0; n < oracle.cols(); ++n)
        if (std::abs(oracle(row, n)) > std::abs(oracle(row, best))) best = n;
    constant = closed[best] / oracle(row, best);
    double dev = 0;
    for (long n = 0; n < oracle.cols(); ++n) dev = std::max(dev, std::abs(closed[n] - constant * oracle(row, n)));
    return dev;
}

} // namespace

RowConstancy check_closed_vs_oracle(const SuiteOptions &opt, long emax) {
    RowConstancy out;
    out.rephased = {"closed form vs oracle, one constant per row (fixed column sign applied)", 0, 1e-9, ""};
    out.raw = {"closed form vs oracle, one constant per row (no rephasing)", 0, 1e-9, ""};
    const auto pairs = rep_pairs(opt, false);
    Worst wr, wraw;
    std::atomic<long> rows{0}, plus{0}, minus{0};
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        const auto oracle = oracle_cgc(p.r1, p.r2, emax);
        for (long E = 0; E <= emax; ++E)
            for (long j = 0; j <= E; ++j) {
                std::vector<double> rephased(E + 1), raw(E + 1);
                for (long n1 = 0; n1 <= E; ++n1) {
                    raw[n1] = cgc_closed({n1, E - n1, E - j, j, p.r1, p.r2});
                    rephased[n1] = raw[n1] * closed_column_sign(n1, E - n1);
                }
                double cr = 0, craw = 0;
                const std::string where = label(p) + " n12=" + std::to_string(E - j) + " j=" + std::to_string(j);
                wr.offer(row_deviation(rephased, oracle.M[E], j, cr), where);
                wraw.offer(row_deviation(raw, oracle.M[E], j, craw), where);
                ++rows;
                if (std::abs(cr - 1) <= 1e-9) ++plus;
                if (std::abs(cr + 1) <= 1e-9) ++minus;
            }
    });
    out.rows = rows;
    out.rows_with_constant_one = plus;
    out.rows_with_constant_minus_one = minus;
    out.rephased.residual = wr.value;
    out.rephased.detail = std::to_string(out.rows) + " rows, absorbed constants: " + std::to_string(plus.load()) +
                          " x (+1), " + std::to_string(minus.load()) + " x (-1); worst at " + wr.where;
    out.raw.residual = wraw.value;
    out.raw.detail = "worst at " + wraw.where;
    return out;
}

CheckResult check_closed_literal_grid(const SuiteOptions &opt, long emax) {
    CheckResult c{"closed form with grid read at s = j vs oracle", 0, 1e-9, ""};
    const auto pairs = rep_pairs(opt, false);
    Worst w;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        const auto oracle = oracle_cgc(p.r1, p.r2, emax);
        for (long E = 0; E <= emax; ++E)
            for (long j = 0; j <= E; ++j) {
                std::vector<double> v(E + 1);
                for (long n1 = 0; n1 <= E; ++n1)
                    v[n1] = cgc_closed({n1, E - n1, E - j, j, p.r1, p.r2}, GridIndexing::Literal) *
                            closed_column_sign(n1, E - n1);
                double cst = 0;
                w.offer(row_deviation(v, oracle.M[E], j, cst),
                        label(p) + " n12=" + std::to_string(E - j) + " j=" + std::to_string(j));
            }
    });
    c.residual = w.value;
    c.detail = "worst at " + w.where;
    return c;
}

VacuumComparison compare_vacuum_norm(long j, const Rational &mu1, const Rational &mu2) {
    const auto v = vacuum_cgc_norm_sq(j, RepLabel{mu1, 1}, RepLabel{mu2, 1});
    return {j, mu1, mu2, v.formula, v.unitarity};
}

ErratumFinding vacuum_norm_finding(const VacuumComparison &v) {
    return {"squared vacuum CGC |<0,j|0,j>|^2, closed expression at j=" + std::to_string(v.j) +
                ", mu1=" + to_string(v.mu1) + ", mu2=" + to_string(v.mu2),
            to_string(v.unitarity) + " (unitarity of the lowest-weight row)", to_string(v.formula), ""};
}

// ---- generating functions ----

GenfunSweep check_genfun(const SuiteOptions &opt, long max_level) {
    GenfunSweep out;
    out.residual = {"generating-function coefficient residual (all parity cases)", 0, 1e-10, ""};
    out.bracket_exact = {"two-2F1 bracket vs direct finite sum (exact)", 0, 0, ""};
    const auto pairs = rep_pairs(opt, true);
    Worst wres, wbr, wconst;
    std::atomic<long> cases{0}, not_one{0};
    bool parity_seen[2][2] = {{false, false}, {false, false}};
    std::mutex seen_mutex;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        const auto table = oracle_cgc(p.r1, p.r2, max_level);
        for (long E = 0; E <= max_level; ++E)
            for (long j = 0; j <= E; ++j) {
                const GenFunCase c{E - j, j, p.r1, p.r2};
                const std::string where = label(p) + " n12=" + std::to_string(c.n12) + " j=" + std::to_string(j);
                const auto m = verify_genfun(c, table);
                wres.offer(m.residual, where);
                const double expl = genfun_expected_constant(c);
                wconst.offer(std::abs(std::abs(m.absorbed_constant) - expl), where);
                if (std::abs(std::abs(m.absorbed_constant) - 1) > 1e-12) ++not_one;
                wbr.offer(hypergeom_sum(c) == hypergeom_sum_direct(c) ? 0.0 : 1.0, where);
                ++cases;
                std::lock_guard<std::mutex> lock(seen_mutex);
                parity_seen[c.n12 % 2][j % 2] = true;
            }
    });
    int branches = 0;
    for (auto &row : parity_seen)
        for (bool b : row) branches += b;
    out.cases = cases;
    out.constants_not_one = not_one;
    out.max_constant_deviation = wconst.value;
    out.residual.residual = wres.value;
    out.residual.detail = std::to_string(out.cases) + " cases, " + std::to_string(branches) +
                          " of 4 parity cases, n12+j <= " + std::to_string(max_level) + "; worst at " + wres.where;
    out.bracket_exact.residual = wbr.value;
    out.bracket_exact.detail = "worst at " + wbr.where;

    const RepLabel r1{Rational(1, 2), 1}, r2{Rational(1, 4), 1};
    const GenFunCase ex{3, 1, r1, r2};
    const auto m = verify_genfun(ex);
    out.odd_constant_example = {
        "generating function for odd n12, prefactor 1/(sqrt([n12-1]_mu12! [1]_mu12) sqrt([j]_mu2!)), at n12=3, j=1, "
        "mu1=1/2, mu2=1/4 (" +
            std::to_string(out.constants_not_one) + " of " + std::to_string(out.cases) +
            " swept cases need a constant other than +-1)",
        "1", fmt(std::abs(m.absorbed_constant)),
        fmt(m.absorbed_constant) + " = sqrt([n12-1]_mu12! [1]_mu12 / [n12]_mu12!) up to sign"};
    return out;
}

CheckResult check_su11_genfun(const std::vector<Rational> &lgrid, long kmax, unsigned threads) {
    CheckResult c{"su(1,1) generating-function coefficient residual (unitarity anchor)", 0, 1e-10, ""};
    std::vector<std::pair<Rational, Rational>> ls;
    for (const auto &a : lgrid)
        for (const auto &b : lgrid) ls.emplace_back(a, b);
    Worst w;
    parallel_for(static_cast<long>(ls.size()), threads, [&](long i) {
        const auto t = su11_oracle_cgc(ls[i].first, ls[i].second, 2 * kmax);
        for (long k = 0; k <= kmax; ++k)
            for (long m12 = 0; m12 <= kmax; ++m12)
                w.offer(su11_verify(k, m12, t), "l1=" + to_string(ls[i].first) + " l2=" + to_string(ls[i].second) +
                                                    " k=" + std::to_string(k) + " m12=" + std::to_string(m12));
    });
    c.residual = w.value;
    c.detail = "k, m12 <= " + std::to_string(kmax) + "; worst at " + w.where;
    return c;
}

Su11NormComparison compare_su11_vacuum_norms(const std::vector<Rational> &lgrid, long kmax) {
    Su11NormComparison out;
    for (const auto &l1 : lgrid)
        for (const auto &l2 : lgrid)
            for (long k = 0; k <= kmax; ++k) {
                const Rational shown = su11_vacuum_norm(k, l1, l2), unit = su11_vacuum_norm_unitarity(k, l1, l2);
                ++out.cases;
                if (shown == unit) {
                    ++out.matches;
                } else if (out.first_mismatch.empty()) {
                    out.first_mismatch = "l1=" + to_string(l1) + " l2=" + to_string(l2) + " k=" + std::to_string(k) +
                                         ": closed " + to_string(shown) + " vs unitarity " + to_string(unit);
                }
            }
    const Rational l(1);
    out.finding = {"su(1,1) squared vacuum CGC, closed expression (2l1+k-1)!(2l1+2l2-2)!/((2l1-1)!(2l12-2)!) at "
                   "l1=l2=1, k=1 (" +
                       std::to_string(out.cases - out.matches) + " of " + std::to_string(out.cases) +
                       " swept cases disagree)",
                   to_string(su11_vacuum_norm_unitarity(1, l, l)) + " = (2l1)_k/(2l1+2l2+k-1)_k from unitarity",
                   to_string(su11_vacuum_norm(1, l, l)), ""};
    return out;
}

// ---- wavefunctions ----

CheckResult check_wavefun_ladder(const std::vector<Rational> &grid, long nmax) {
    CheckResult c{"Dunkl realization ladder actions on psi_n", 0, 1e-11, ""};
    for (const auto &mu : grid)
        for (long n = 0; n <= nmax; ++n) {
            const auto p = psi1d(n, mu), q = psi1d(n + 1, mu);
            const double up = std::sqrt(to_double(mu_number(n + 1, mu)));
            auto diff = [](const DensePoly<double> &a, const DensePoly<double> &b) {
                double m = 0;
                for (std::size_t i = 0; i < std::max(a.c.size(), b.c.size()); ++i)
                    m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
                return m;
            };
            c.residual = std::max(c.residual, diff(realize_apply(Generator::Jplus, p).poly, q.poly * up));
            c.residual = std::max(c.residual, diff(realize_apply(Generator::Jminus, q).poly, p.poly * up));
            c.residual = std::max(c.residual,
                                  diff(realize_apply(Generator::J0, p).poly, p.poly * (n + to_double(mu) + 0.5)));
            const double par = (n % 2 == 0) ? 1.0 : -1.0;
            c.residual = std::max(c.residual, diff(realize_apply(Generator::R, p).poly, p.poly * par));
        }
    c.detail = "J+, J-, J0, R on psi_n, n <= " + std::to_string(nmax);
    return c;
}

CheckResult check_wavefun_anticommutator(const std::vector<Rational> &grid, int trials) {
    CheckResult c{"{J+, J-} = 2 J0 on random Gaussian polynomials", 0, 1e-11, ""};
    std::mt19937 rng(20240611);
    std::normal_distribution<double> g;
    for (const auto &mu : grid)
        for (int t = 0; t < trials; ++t) {
            std::vector<double> coeffs(1 + t % 10);
            for (double &v : coeffs) v = g(rng);
            const GaussianPoly1D f{DensePoly<double>(coeffs), RepLabel{mu, 1}};
            const auto a = realize_apply(Generator::Jplus, realize_apply(Generator::Jminus, f)).poly +
                           realize_apply(Generator::Jminus, realize_apply(Generator::Jplus, f)).poly;
            const auto b = realize_apply(Generator::J0, f).poly * 2.0;
            for (std::size_t i = 0; i < std::max(a.c.size(), b.c.size()); ++i)
                c.residual = std::max(c.residual, std::abs(a.coeff(i) - b.coeff(i)));
        }
    c.detail = std::to_string(trials) + " random polynomials per mu, degree <= 9";
    return c;
}

CheckResult check_wavefun_orthonormality(const std::vector<Rational> &grid, long nmax) {
    CheckResult c{"psi_n orthonormality under |x|^{2mu} dx (quadrature)", 0, 1e-8, ""};
    for (const auto &mu : grid)
        for (long n = 0; n <= nmax; ++n)
            for (long m = 0; m <= nmax; ++m)
                c.residual = std::max(c.residual, std::abs(psi1d_overlap(n, m, mu) - (n == m ? 1.0 : 0.0)));
    c.detail = "n, m <= " + std::to_string(nmax);
    return c;
}

EigenChecks check_wavefun_eigenvalues(const SuiteOptions &opt, long emax) {
    EigenChecks out;
    out.hamiltonian = {"H_xy eigenvalue n12 + mu12 + 1/2 on coupled wavefunctions", 0, 1e-11, ""};
    out.casimir = {"Casimir realization eigenvalue -eps12 mu12 on coupled wavefunctions", 0, 1e-11, ""};
    const auto pairs = rep_pairs(opt, false);
    Worst wh, wc;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        for (long E = 0; E <= emax; ++E)
            for (long j = 0; j <= E; ++j) {
                const long n12 = E - j;
                const auto psi = coupled_psi(n12, j, p.r1.mu, p.r2.mu);
                const double mu12 = to_double(coupled_mu(j, p.r1, p.r2));
                const double eps12 = coupled_eps(j, p.r1, p.r2);
                const std::string where = label(p) + " n12=" + std::to_string(n12) + " j=" + std::to_string(j);
                wh.offer(eigen_residual(hamiltonian2d_apply(psi).poly, psi.poly, n12 + mu12 + 0.5), where);
                wc.offer(eigen_residual(casimir2d_apply(psi).poly, psi.poly, -eps12 * mu12), where);
            }
    });
    out.hamiltonian.residual = wh.value;
    out.hamiltonian.detail = "n12+j <= " + std::to_string(emax) + "; worst at " + wh.where;
    out.casimir.residual = wc.value;
    out.casimir.detail = "n12+j <= " + std::to_string(emax) + "; worst at " + wc.where;
    return out;
}

CheckResult check_decomposition(const SuiteOptions &opt, long emax) {
    CheckResult c{"coupled wavefunction = sum CGC psi psi (bivariate coefficients)", 0, 1e-10, ""};
    const auto pairs = rep_pairs(opt, false);
    Worst w, wconst;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        const auto table = oracle_cgc(p.r1, p.r2, emax);
        for (long E = 0; E <= emax; ++E)
            for (long j = 0; j <= E; ++j) {
                const auto d = decomposition_residual(E - j, j, table);
                const std::string where = label(p) + " n12=" + std::to_string(E - j) + " j=" + std::to_string(j);
                w.offer(d.residual, where);
                wconst.offer(std::abs(std::abs(d.absorbed_constant) - 1), where);
            }
    });
    c.residual = std::max(w.value, wconst.value);
    c.detail = "n12+j <= " + std::to_string(emax) + "; max | |absorbed| - 1 | = " + fmt(wconst.value) +
               "; worst residual at " + w.where;
    return c;
}

CheckResult check_angular_series(const SuiteOptions &opt, long emax) {
    CheckResult c{"angular generating function vs CGC series", 0, 1e-10, ""};
    const auto pairs = rep_pairs(opt, false);
    Worst w, wconst;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        const auto table = oracle_cgc(p.r1, p.r2, emax);
        for (long E = 0; E <= emax; ++E)
            for (long j = 0; j <= E; ++j) {
                const auto m = compare_matched(angular_series_coeffs(E - j, j, table),
                                               angular_genfun_coeffs(E - j, j, p.r1.mu, p.r2.mu));
                const std::string where = label(p) + " n12=" + std::to_string(E - j) + " j=" + std::to_string(j);
                w.offer(m.residual, where);
                wconst.offer(std::abs(std::abs(m.absorbed_constant) - 1), where);
            }
    });
    c.residual = std::max(w.value, wconst.value);
    c.detail = "n12+j <= " + std::to_string(emax) + "; max | |absorbed| - 1 | = " + fmt(wconst.value);
    return c;
}

CheckResult check_concordance(const SuiteOptions &opt, long emax) {
    CheckResult c{"angular generating function proportional to the algebraic one", 0, 1e-10, ""};
    const auto pairs = rep_pairs(opt, false);
    Worst w, wconst;
    parallel_for(static_cast<long>(pairs.size()), opt.threads, [&](long i) {
        const auto &p = pairs[i];
        for (long E = 0; E <= emax; ++E)
            for (long j = 0; j <= E; ++j) {
                const GenFunCase gc{E - j, j, p.r1, p.r2};
                const auto m = compare_matched(genfun_rhs_coeffs(gc), angular_genfun_coeffs(E - j, j, p.r1.mu, p.r2.mu));
                const double expect = std::sqrt(std::tgamma(to_double(p.r1.mu) + 0.5) *
                                                std::tgamma(to_double(p.r2.mu) + 0.5) / std::pow(2.0, E)) /
                                      genfun_expected_constant(gc);
                const std::string where = label(p) + " n12=" + std::to_string(E - j) + " j=" + std::to_string(j);
                w.offer(m.residual, where);
                wconst.offer(std::abs(std::abs(m.absorbed_constant) - expect) / expect, where);
            }
    });
    c.residual = w.value;
    c.detail = "n12+j <= " + std::to_string(emax) +
               "; constant = sqrt(Gamma(mu1+1/2) Gamma(mu2+1/2) / 2^(n12+j)) / (odd-n12 constant), max relative "
               "deviation " +
               fmt(wconst.value) + "; worst residual at " + w.where;
    return c;
}

// ---- suites ----

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"orthogonality", "unitarity", "genfun", "su11", "wavefun", "all"};
    return names;
}

namespace {

nlohmann::json grid_json(const std::vector<Rational> &g) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto &v : g) a.push_back(rational_json(v));
    return a;
}

Report suite_orthogonality(const SuiteOptions &opt) {
    Report r;
    r.checks.push_back(check_dm1h_orthogonality(opt.mu_grid, opt.max_level));
    r.checks.push_back(check_dm1h_hyper_exact(opt.mu_grid, opt.max_level));
    r.checks.push_back(check_dm1h_hyper_float(opt.mu_grid, opt.max_level));
    r.erratum_findings.push_back(
        {"explicit 3F2 forms of the dual -1 Hahn polynomials (signs of delta and of the linear factor, "
         "denominator parameters)",
         "agreement with the three-term recurrence",
         "displayed forms disagree with the recurrence; corrected forms are used and agree exactly", ""});
    return r;
}

Report suite_unitarity(const SuiteOptions &opt) {
    Report r;
    r.checks.push_back(check_oracle_unitarity(opt, opt.max_level));
    const auto rc = check_closed_vs_oracle(opt, opt.max_level);
    r.checks.push_back(rc.rephased);
    r.results["closed_vs_oracle"] = {{"rows", rc.rows},
                                     {"constant_plus_one", rc.rows_with_constant_one},
                                     {"constant_minus_one", rc.rows_with_constant_minus_one},
                                     {"raw_row_deviation", rc.raw.residual},
                                     {"rephased_row_deviation", rc.rephased.residual}};
    if (!rc.raw.pass())
        r.erratum_findings.push_back(
            {"closed-form CGC vs twisted-coproduct oracle, signed entries",
             "one constant per (n12, j) row",
             "row deviation " + fmt(rc.raw.residual) +
                 " without rephasing; exact after the column sign (-1)^{n1(n1-1)/2 + n1 n2}",
             "+-1 per row"});
    const auto lit = check_closed_literal_grid(opt, opt.max_level);
    if (!lit.pass())
        r.erratum_findings.push_back({"closed-form CGC, grid point y_j", "agreement with the oracle",
                                      "row deviation " + fmt(lit.residual) +
                                          " when read at s = j; exact at s = N - j (N even), s = j (N odd)",
                                      ""});
    nlohmann::json vac = nlohmann::json::array();
    const Rational h(1, 2);
    for (long j = 0; j <= 5; ++j) {
        const auto v = compare_vacuum_norm(j, h, h);
        vac.push_back({{"j", j},
                       {"mu1", rational_json(h)},
                       {"mu2", rational_json(h)},
                       {"formula", rational_json(v.formula)},
                       {"unitarity", rational_json(v.unitarity)}});
        if (v.formula != v.unitarity) r.erratum_findings.push_back(vacuum_norm_finding(v));
    }
    r.results["vacuum_norms"] = vac;
    r.erratum_findings.push_back({"first excited CGC <n, 1+j-n | 1, j>, closed expression at n = 0",
                                  "sqrt([1+j]_mu2) <0,j|0,j> / sqrt([1]_mu12)",
                                  "[1+j]_mu2 <0,j|0,j> / sqrt([1]_mu12)", ""});
    return r;
}

Report suite_genfun(const SuiteOptions &opt) {
    Report r;
    const auto g = check_genfun(opt, opt.max_level);
    r.checks.push_back(g.residual);
    r.checks.push_back(g.bracket_exact);
    r.results["genfun"] = {{"cases", g.cases},
                           {"constants_not_one", g.constants_not_one},
                           {"max_unexplained_constant_deviation", g.max_constant_deviation}};
    if (g.constants_not_one > 0) r.erratum_findings.push_back(g.odd_constant_example);
    r.erratum_findings.push_back({"odd-n12 generating function, branch labels", "j even / j odd",
                                  "both branches labelled j even; read as j even / j odd", ""});
    return r;
}

Report suite_su11(const SuiteOptions &opt) {
    Report r;
    const auto lgrid = default_l_grid();
    r.checks.push_back(check_su11_genfun(lgrid, opt.max_level, opt.threads));
    const auto n = compare_su11_vacuum_norms(lgrid, opt.max_level);
    r.results["su11_vacuum_norms"] = {{"cases", n.cases}, {"closed_equals_unitarity", n.matches},
                                      {"first_mismatch", n.first_mismatch}};
    if (n.matches != n.cases) r.erratum_findings.push_back(n.finding);
    return r;
}

Report suite_wavefun(const SuiteOptions &opt) {
    Report r;
    r.checks.push_back(check_wavefun_ladder(opt.mu_grid, opt.max_level));
    r.checks.push_back(check_wavefun_anticommutator(opt.mu_grid, 25));
    r.checks.push_back(check_wavefun_orthonormality(opt.mu_grid, std::min<long>(opt.max_level, 6)));
    const auto e = check_wavefun_eigenvalues(opt, opt.max_level);
    r.checks.push_back(e.hamiltonian);
    r.checks.push_back(e.casimir);
    r.checks.push_back(check_decomposition(opt, opt.max_level));
    r.checks.push_back(check_angular_series(opt, opt.max_level));
    r.checks.push_back(check_concordance(opt, opt.max_level));
    return r;
}

} // namespace

Report run_suite(const std::string &name, const SuiteOptions &opt) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + name);
    Report r;
    r.command = "verify";
    r.params = {{"suite", name}, {"mu_grid", grid_json(opt.mu_grid)}, {"max_level", opt.max_level}};
    if (name == "orthogonality" || name == "all") r.merge(suite_orthogonality(opt));
    if (name == "unitarity" || name == "all") r.merge(suite_unitarity(opt));
    if (name == "genfun" || name == "all") r.merge(suite_genfun(opt));
    if (name == "su11" || name == "all") r.merge(suite_su11(opt));
    if (name == "wavefun" || name == "all") r.merge(suite_wavefun(opt));
    return r;
}

} // namespace parabose
