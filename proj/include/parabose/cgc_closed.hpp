#pragma once

#include "parabose/orthopoly.hpp"
#include "parabose/osp_rep.hpp"

namespace parabose {

struct CgcQuery {
    long n1 = 0, n2 = 0, n12 = 0, j = 0;
    RepLabel r1, r2;
};

// Which point of the dual -1 Hahn grid a coupled row (n12, j) is read at.
enum class GridIndexing {
    // The grid point whose magnitude is 2 mu12: s = N - j for N even, s = j
    // for N odd (N = n1 + n2). This is the reading that reproduces the oracle.
    RowMatched,
    // s = j, as the formula is usually displayed.
    Literal,
};

long closed_grid_index(long N, long j, GridIndexing indexing = GridIndexing::RowMatched);

struct ClosedCgcDetail {
    double value = 0;
    long grid_index = 0;
    Rational weight;   // w_s
    Rational radicand; // w_s [n2]! / (kappa0 [n1]! [N]!)
    Rational poly_value; // R_{n1}(y_s)
};

// 2^{-n1} sqrt(w_s [n2]_mu2! / (kappa0 [n1]_mu1! [N]_mu2!)) R_{n1}(y_s; mu2, mu1, N)
// with N = n1 + n2. Zero when n1 + n2 != n12 + j. Throws DomainError
// ("weight-positivity failure") if w_s < 0. The formula has no eps
// dependence; it corresponds to eps1 = eps2 = +1.
ClosedCgcDetail cgc_closed_detail(const CgcQuery &q, GridIndexing indexing = GridIndexing::RowMatched);
double cgc_closed(const CgcQuery &q, GridIndexing indexing = GridIndexing::RowMatched);

// Row-independent sign (-1)^{n1(n1-1)/2 + n1 n2}: the closed form equals the
// oracle times this sign times a per-row constant. It is a rephasing of the
// uncoupled basis vectors |n1, n2>, so it does not affect magnitudes or
// unitarity.
int closed_column_sign(long n1, long n2);

// Table assembled from cgc_closed for all levels up to emax.
CgcTable closed_cgc_table(const RepLabel &r1, const RepLabel &r2, long emax,
                          GridIndexing indexing = GridIndexing::RowMatched);

// Exact squared ratio |<n, j-n | 0, j> / <0, j | 0, j>|^2 = F(j,n) / [n]_mu1!
// and the accompanying sign (-1/eps2)^n (-1)^{nj - n(n+1)/2}.
Rational vacuum_ratio_sq(long n, long j, const RepLabel &r1, const RepLabel &r2);
int vacuum_ratio_sign(long n, long j, const RepLabel &r2);

struct VacuumNorm {
    Rational unitarity; // 1 / sum_n F(j,n)/[n]_mu1!, the anchor used throughout
    Rational formula;   // closed display evaluated as printed
};
VacuumNorm vacuum_cgc_norm_sq(long j, const RepLabel &r1, const RepLabel &r2);

// <n, j-n | 0, j>, anchored by unitarity with <0, j | 0, j> > 0.
double vacuum_cgc(long n, long j, const RepLabel &r1, const RepLabel &r2);

// <n, 1+j-n | 1, j> from Delta(J+) applied to the vacuum row, divided by
// sqrt([1]_mu12).
double first_cgc(long n, long j, const RepLabel &r1, const RepLabel &r2);

// The displayed closed expression evaluated literally, with the falling
// product [j]...[j-n+2] taken as empty (= 1) at n = 0 and n = 1.
double first_cgc_literal(long n, long j, const RepLabel &r1, const RepLabel &r2);

} // namespace parabose
