#include "parabose/cgc_closed.hpp"

#include <cmath>

namespace parabose {

namespace {

int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace

long closed_grid_index(long N, long j, GridIndexing indexing) {
    if (indexing == GridIndexing::Literal) return j;
    return (N % 2 == 0) ? N - j : j;
}

ClosedCgcDetail cgc_closed_detail(const CgcQuery &q, GridIndexing indexing) {
    if (q.n1 < 0 || q.n2 < 0 || q.n12 < 0 || q.j < 0)
        throw std::invalid_argument("cgc_closed: negative label");
    ClosedCgcDetail d;
    const long N = q.n1 + q.n2;
    if (N != q.n12 + q.j) return d;
    const Rational &mu1 = q.r1.mu, &mu2 = q.r2.mu;
    const Dm1hData data = dm1h_data(mu2, mu1, N);
    d.grid_index = closed_grid_index(N, q.j, indexing);
    d.weight = data.weights[d.grid_index];
    if (d.weight < 0)
        throw DomainError("weight-positivity failure: w_" + std::to_string(d.grid_index) + " = " +
                          to_string(d.weight) + " for mu1=" + to_string(mu1) + ", mu2=" + to_string(mu2) +
                          ", N=" + std::to_string(N));
    d.radicand = d.weight * mu_factorial(q.n2, mu2) /
                 (data.kappa0 * mu_factorial(q.n1, mu1) * mu_factorial(N, mu2));
    d.poly_value = dual_m1_hahn(q.n1, mu2, mu1, N)(data.grid[d.grid_index]);
    d.value = std::ldexp(1.0, static_cast<int>(-q.n1)) * std::sqrt(to_double(d.radicand)) *
              to_double(d.poly_value);
    return d;
}

double cgc_closed(const CgcQuery &q, GridIndexing indexing) { return cgc_closed_detail(q, indexing).value; }

int closed_column_sign(long n1, long n2) { return neg_one_pow(n1 * (n1 - 1) / 2 + n1 * n2); }

CgcTable closed_cgc_table(const RepLabel &r1, const RepLabel &r2, long emax, GridIndexing indexing) {
    CgcTable t;
    t.r1 = r1;
    t.r2 = r2;
    t.emax = emax;
    t.phase_convention = "closed form as displayed (no per-row phase applied)";
    for (long E = 0; E <= emax; ++E) {
        Eigen::MatrixXd m(E + 1, E + 1);
        for (long j = 0; j <= E; ++j)
            for (long n1 = 0; n1 <= E; ++n1) m(j, n1) = cgc_closed({n1, E - n1, E - j, j, r1, r2}, indexing);
        t.M.push_back(std::move(m));
    }
    return t;
}

Rational vacuum_ratio_sq(long n, long j, const RepLabel &r1, const RepLabel &r2) {
    return mu_falling(j, n, r2.mu) / mu_factorial(n, r1.mu);
}

int vacuum_ratio_sign(long n, long j, const RepLabel &r2) {
    // (-1/eps2)^n = (-eps2)^n since eps2 = +-1.
    return neg_one_pow(n) * (n % 2 == 0 ? 1 : r2.eps) * parity_sign(n, j);
}

VacuumNorm vacuum_cgc_norm_sq(long j, const RepLabel &r1, const RepLabel &r2) {
    if (j < 0) throw std::invalid_argument("vacuum_cgc_norm_sq: negative j");
    Rational s = 0;
    for (long n = 0; n <= j; ++n) s += vacuum_ratio_sq(n, j, r1, r2);
    VacuumNorm v;
    v.unitarity = 1 / s;
    const Rational half(1, 2);
    const long h = (j % 2 == 0) ? j / 2 : (j + 1) / 2;
    Rational base = Rational(j + 1, 2) + r1.mu + r2.mu;
    if (j % 2 == 0) base = Rational(j, 2) + 1 + r1.mu + r2.mu;
    v.formula = pochhammer(base, h) / (Rational(Integer(1) << h) * pochhammer(half + r1.mu, h));
    return v;
}

double vacuum_cgc(long n, long j, const RepLabel &r1, const RepLabel &r2) {
    if (n < 0 || n > j) throw std::invalid_argument("vacuum_cgc: need 0 <= n <= j");
    const Rational anchor = vacuum_cgc_norm_sq(j, r1, r2).unitarity;
    return vacuum_ratio_sign(n, j, r2) * std::sqrt(to_double(vacuum_ratio_sq(n, j, r1, r2) * anchor));
}

double first_cgc(long n, long j, const RepLabel &r1, const RepLabel &r2) {
    if (n < 0 || n > j + 1) throw std::invalid_argument("first_cgc: need 0 <= n <= j+1");
    const long n2 = 1 + j - n;
    double v = 0;
    if (n >= 1)
        v += r2.eps * neg_one_pow(n2) * std::sqrt(to_double(mu_number(n, r1.mu))) * vacuum_cgc(n - 1, j, r1, r2);
    if (n <= j) v += std::sqrt(to_double(mu_number(n2, r2.mu))) * vacuum_cgc(n, j, r1, r2);
    return v / std::sqrt(to_double(mu_number(1, coupled_mu(j, r1, r2))));
}

double first_cgc_literal(long n, long j, const RepLabel &r1, const RepLabel &r2) {
    if (n < 0 || n > j + 1) throw std::invalid_argument("first_cgc_literal: need 0 <= n <= j+1");
    const Rational falling = n >= 1 ? mu_falling(j, n - 1, r2.mu) : Rational(1);
    const Rational bracket = mu_number(n, r1.mu) + mu_number(1 + j - n, r2.mu);
    const Rational anchor = vacuum_cgc_norm_sq(j, r1, r2).unitarity;
    const double mag = std::sqrt(to_double(falling / mu_factorial(n, r1.mu) * anchor /
                                           mu_number(1, coupled_mu(j, r1, r2)))) *
                       to_double(bracket);
    return vacuum_ratio_sign(n, j, r2) * mag;
}

} // namespace parabose
