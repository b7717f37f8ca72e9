#pragma once

#include "report.hpp"

#include "parabose/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace parabose {

std::vector<Rational> default_mu_grid();
std::vector<Rational> default_l_grid();

struct SuiteOptions {
    std::vector<Rational> mu_grid = default_mu_grid();
    std::vector<int> eps_grid{1, -1};
    long max_level = 8;
    unsigned threads = 0; // 0: PARABOSE_THREADS, else hardware concurrency
};

// Worker count: the request if nonzero, else PARABOSE_THREADS, else the
// hardware concurrency; capped by PARABOSE_THREADS when that is set.
unsigned suite_threads(unsigned requested);

// Runs fn(0..n-1) on up to `threads` workers.
void parallel_for(long n, unsigned threads, const std::function<void(long)> &fn);

const std::vector<std::string> &suite_names();
// Throws std::invalid_argument for an unknown suite name.
Report run_suite(const std::string &name, const SuiteOptions &opt);

// ---- individual sweeps ----

// max |sum_s w_s R_n R_m - delta_nm kappa0 u_1...u_n| in exact arithmetic.
CheckResult check_dm1h_orthogonality(const std::vector<Rational> &grid, long nmax_N);
// Recurrence against the 3F2 forms at every grid point, n <= N.
CheckResult check_dm1h_hyper_exact(const std::vector<Rational> &grid, long nmax_N);
// Float 3F2 path; residual relative to the scale max(1, sum |c_i| |y|^i).
CheckResult check_dm1h_hyper_float(const std::vector<Rational> &grid, long nmax_N);

// max ||M[E]^T M[E] - I||_inf over the mu and eps grids.
CheckResult check_oracle_unitarity(const SuiteOptions &opt, long emax);

struct RowConstancy {
    CheckResult rephased; // after the fixed column sign
    CheckResult raw;      // closed vs oracle entrywise, no rephasing
    long rows = 0;
    long rows_with_constant_one = 0;
    long rows_with_constant_minus_one = 0;
};
RowConstancy check_closed_vs_oracle(const SuiteOptions &opt, long emax);
// Same sweep reading the grid at s = j as displayed.
CheckResult check_closed_literal_grid(const SuiteOptions &opt, long emax);

struct VacuumComparison {
    long j = 0;
    Rational mu1, mu2;
    Rational formula, unitarity;
};
VacuumComparison compare_vacuum_norm(long j, const Rational &mu1, const Rational &mu2);
ErratumFinding vacuum_norm_finding(const VacuumComparison &v);

struct GenfunSweep {
    CheckResult residual;
    CheckResult bracket_exact; // bracket vs direct finite sum, exact
    long cases = 0;
    long constants_not_one = 0;
    double max_constant_deviation = 0; // | |absorbed| - explained constant |
    ErratumFinding odd_constant_example;
};
GenfunSweep check_genfun(const SuiteOptions &opt, long max_level);

CheckResult check_su11_genfun(const std::vector<Rational> &lgrid, long kmax, unsigned threads);
struct Su11NormComparison {
    long cases = 0;
    long matches = 0;
    std::string first_mismatch;
    ErratumFinding finding;
};
Su11NormComparison compare_su11_vacuum_norms(const std::vector<Rational> &lgrid, long kmax);

CheckResult check_wavefun_ladder(const std::vector<Rational> &grid, long nmax);
CheckResult check_wavefun_anticommutator(const std::vector<Rational> &grid, int trials);
CheckResult check_wavefun_orthonormality(const std::vector<Rational> &grid, long nmax);
struct EigenChecks {
    CheckResult hamiltonian;
    CheckResult casimir;
};
EigenChecks check_wavefun_eigenvalues(const SuiteOptions &opt, long emax);
CheckResult check_decomposition(const SuiteOptions &opt, long emax);
CheckResult check_angular_series(const SuiteOptions &opt, long emax);
CheckResult check_concordance(const SuiteOptions &opt, long emax);

} // namespace parabose
