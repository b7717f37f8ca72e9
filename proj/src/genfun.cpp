#include "parabose/genfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace parabose {

namespace {

const Rational kHalf(1, 2);

std::vector<double> to_doubles(const DensePoly<Rational> &p) {
    std::vector<double> out;
    out.reserve(p.c.size());
    for (const auto &v : p.c) out.push_back(to_double(v));
    return out;
}

DensePoly<Rational> binomial_power(long m, const Rational &a) {
    // (1 + a z)^m
    DensePoly<Rational> p = DensePoly<Rational>::constant(1);
    const DensePoly<Rational> f(std::vector<Rational>{Rational(1), a});
    for (long i = 0; i < m; ++i) p = p * f;
    return p;
}

} // namespace

DensePoly<Rational> f21_in_minus_square(const Rational &a, const Rational &b, const Rational &c) {
    const auto h = hypergeom_coefficients<Rational>({a, b}, {c});
    std::vector<Rational> out(2 * h.size() - 1, Rational(0));
    for (std::size_t m = 0; m < h.size(); ++m) out[2 * m] = (m % 2 == 0) ? h[m] : Rational(-h[m]);
    return DensePoly<Rational>(std::move(out));
}

void GenFunCase::validate() const {
    if (n12 < 0 || j < 0) throw std::invalid_argument("GenFunCase: n12 and j must be non-negative");
    if (r1.mu <= 0 || r2.mu <= 0) throw DomainError("GenFunCase: mu1, mu2 must be positive");
    if (std::abs(r1.eps) != 1 || std::abs(r2.eps) != 1) throw std::invalid_argument("GenFunCase: eps must be +-1");
}

HypergeomSumForm hypergeom_sum_form(const GenFunCase &c) {
    c.validate();
    const long j = c.j;
    const Rational &mu1 = c.r1.mu, &mu2 = c.r2.mu;
    const Rational hj(j, 2);
    const Rational denom = (1 + 2 * mu1) * c.r2.eps;
    const Rational c1 = kHalf + mu1, c2 = Rational(3, 2) + mu1;
    HypergeomSumForm f;
    if (c.n12_even()) {
        if (j % 2 == 0) {
            f.terms.push_back({-hj, kHalf - hj - mu2, c1, Rational(1), 0});
            if (j > 0) f.terms.push_back({1 - hj, kHalf - hj - mu2, c2, Rational(j) / denom, 1});
        } else {
            const Rational a = -Rational(j - 1, 2);
            f.terms.push_back({a, -hj - mu2, c1, Rational(1), 0});
            f.terms.push_back({a, 1 - hj - mu2, c2, -(j + 2 * mu2) / denom, 1});
        }
    } else {
        if (j % 2 == 0) {
            f.terms.push_back({-hj, -Rational(j + 1, 2) - mu2, c1, Rational(1), 0});
            f.terms.push_back({-hj, -Rational(j - 1, 2) - mu2, c2, (j + 1 + 2 * mu1) / denom, 1});
        } else {
            f.terms.push_back({-Rational(j + 1, 2), -hj - mu2, c1, Rational(1), 0});
            f.terms.push_back({-Rational(j - 1, 2), -hj - mu2, c2, -(1 + j + 2 * mu1 + 2 * mu2) / denom, 1});
        }
    }
    return f;
}

DensePoly<Rational> hypergeom_sum(const GenFunCase &c) {
    DensePoly<Rational> out;
    for (const auto &t : hypergeom_sum_form(c).terms)
        out = out + (f21_in_minus_square(t.a, t.b, t.c) * t.scale).shifted(t.s_shift);
    return out;
}

DensePoly<Rational> hypergeom_sum_direct(const GenFunCase &c) {
    c.validate();
    const long j = c.j;
    const Rational &mu1 = c.r1.mu, &mu2 = c.r2.mu;
    std::vector<Rational> out;
    if (c.n12_even()) {
        for (long n = 0; n <= j; ++n)
            out.push_back(vacuum_ratio_sign(n, j, c.r2) * mu_falling(j, n, mu2) / mu_factorial(n, mu1));
    } else {
        for (long n = 0; n <= j + 1; ++n) {
            Rational f = 1 / mu_number(j + 1, mu2);
            if (n > 0) f = mu_falling(j, n - 1, mu2);
            out.push_back(vacuum_ratio_sign(n, j, c.r2) * f / mu_factorial(n, mu1) *
                          (mu_number(n, mu1) + mu_number(1 + j - n, mu2)));
        }
    }
    return DensePoly<Rational>(std::move(out));
}

DensePoly<double> genfun_rhs_coeffs(const GenFunCase &c) {
    c.validate();
    const Rational mu12 = coupled_mu(c.j, c.r1, c.r2);
    const Rational anchor = vacuum_cgc_norm_sq(c.j, c.r1, c.r2).unitarity;
    Rational radicand;
    long k;
    if (c.n12_even()) {
        radicand = anchor / (mu_factorial(c.j, c.r2.mu) * mu_factorial(c.n12, mu12));
        k = c.n12 / 2;
    } else {
        radicand = anchor / (mu_factorial(c.n12 - 1, mu12) * mu_number(1, mu12) * mu_factorial(c.j, c.r2.mu));
        k = (c.n12 - 1) / 2;
    }
    const DensePoly<Rational> exact = one_plus_square_power<Rational>(k) * hypergeom_sum(c);
    const double pre = std::sqrt(to_double(radicand));
    std::vector<double> out = to_doubles(exact);
    for (double &v : out) v *= pre;
    return DensePoly<double>(std::move(out));
}

double genfun_rhs(const GenFunCase &c, double s) { return genfun_rhs_coeffs(c)(s); }

DensePoly<double> genfun_lhs_coeffs(const GenFunCase &c, const CgcTable &table) {
    c.validate();
    const long E = c.n12 + c.j;
    std::vector<double> out(E + 1);
    for (long n = 0; n <= E; ++n)
        out[n] = table.coeff(n, E - n, c.n12, c.j) /
                 std::sqrt(to_double(mu_factorial(n, c.r1.mu) * mu_factorial(E - n, c.r2.mu)));
    return DensePoly<double>(std::move(out));
}

DensePoly<double> genfun_lhs_coeffs(const GenFunCase &c, CgcSource source) {
    c.validate();
    if (source == CgcSource::Oracle) return genfun_lhs_coeffs(c, oracle_cgc(c.r1, c.r2, c.n12 + c.j));
    if (c.r1.eps != 1 || c.r2.eps != 1) throw DomainError("closed CGC source requires eps1 = eps2 = +1");
    const long E = c.n12 + c.j;
    std::vector<double> out(E + 1);
    for (long n = 0; n <= E; ++n)
        out[n] = closed_column_sign(n, E - n) * cgc_closed({n, E - n, c.n12, c.j, c.r1, c.r2}) /
                 std::sqrt(to_double(mu_factorial(n, c.r1.mu) * mu_factorial(E - n, c.r2.mu)));
    return DensePoly<double>(std::move(out));
}

double genfun_lhs(const GenFunCase &c, double s, CgcSource source) { return genfun_lhs_coeffs(c, source)(s); }

MatchedComparison compare_matched(const DensePoly<double> &lhs, const DensePoly<double> &rhs) {
    MatchedComparison m;
    const std::size_t len = std::max(lhs.c.size(), rhs.c.size());
    double scale = 0;
    for (double v : lhs.c) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < len; ++i)
        if (std::abs(lhs.coeff(i)) > 1e-12 * scale) {
            m.match_index = static_cast<long>(i);
            break;
        }
    if (m.match_index < 0 || rhs.coeff(m.match_index) == 0.0) {
        m.absorbed_constant = std::numeric_limits<double>::quiet_NaN();
        m.residual = std::numeric_limits<double>::infinity();
        if (m.match_index < 0) {
            // lhs vanishes identically; compare against rhs directly.
            m.residual = 0;
            for (double v : rhs.c) m.residual = std::max(m.residual, std::abs(v));
        }
        return m;
    }
    m.absorbed_constant = lhs.coeff(m.match_index) / rhs.coeff(m.match_index);
    for (std::size_t i = 0; i < len; ++i)
        m.residual = std::max(m.residual, std::abs(lhs.coeff(i) - m.absorbed_constant * rhs.coeff(i)));
    return m;
}

double genfun_expected_constant(const GenFunCase &c) {
    if (c.n12_even()) return 1.0;
    const Rational mu12 = coupled_mu(c.j, c.r1, c.r2);
    return std::sqrt(to_double(mu_factorial(c.n12 - 1, mu12) * mu_number(1, mu12) / mu_factorial(c.n12, mu12)));
}

MatchedComparison verify_genfun(const GenFunCase &c, const CgcTable &table) {
    return compare_matched(genfun_lhs_coeffs(c, table), genfun_rhs_coeffs(c));
}

MatchedComparison verify_genfun(const GenFunCase &c, CgcSource source) {
    return compare_matched(genfun_lhs_coeffs(c, source), genfun_rhs_coeffs(c));
}

DensePoly<double> su11_genfun_rhs_coeffs(long k, long m12, const Rational &l1, const Rational &l2,
                                         const Rational &anchor_sq) {
    if (l1 <= 0 || l2 <= 0) throw DomainError("su11_genfun_rhs: l1, l2 must be positive");
    if (k < 0 || m12 < 0) throw std::invalid_argument("su11_genfun_rhs: k, m12 must be non-negative");
    const Rational l12 = l1 + l2 + k;
    const DensePoly<Rational> f(hypergeom_coefficients<Rational>({Rational(-k), 1 - k - 2 * l2}, {2 * l1}));
    const DensePoly<Rational> exact = f * binomial_power(m12, Rational(-1));
    const Rational radicand = anchor_sq / (Rational(factorial(m12)) * pochhammer(2 * l12, m12) *
                                           Rational(factorial(k)) * pochhammer(2 * l2, k));
    const double pre = std::sqrt(to_double(radicand));
    std::vector<double> out = to_doubles(exact);
    for (double &v : out) v *= pre;
    return DensePoly<double>(std::move(out));
}

double su11_genfun_rhs(long k, long m12, const Rational &l1, const Rational &l2, double z) {
    return su11_genfun_rhs_coeffs(k, m12, l1, l2, su11_vacuum_norm_unitarity(k, l1, l2))(z);
}

DensePoly<double> su11_genfun_lhs_coeffs(long k, long m12, const Su11Table &table) {
    const long E = k + m12;
    std::vector<double> out(E + 1);
    for (long m = 0; m <= E; ++m) {
        const Rational d = Rational(factorial(m)) * pochhammer(2 * table.l1, m) * Rational(factorial(E - m)) *
                           pochhammer(2 * table.l2, E - m);
        out[m] = (m % 2 == 0 ? 1 : -1) * table.coeff(m, E - m, m12, k) / std::sqrt(to_double(d));
    }
    return DensePoly<double>(std::move(out));
}

double su11_verify(long k, long m12, const Su11Table &table) {
    const auto lhs = su11_genfun_lhs_coeffs(k, m12, table);
    const auto rhs = su11_genfun_rhs_coeffs(k, m12, table.l1, table.l2,
                                            su11_vacuum_norm_unitarity(k, table.l1, table.l2));
    double r = 0;
    const std::size_t len = std::max(lhs.c.size(), rhs.c.size());
    for (std::size_t i = 0; i < len; ++i) r = std::max(r, std::abs(lhs.coeff(i) - rhs.coeff(i)));
    return r;
}

double su11_verify(long k, long m12, const Rational &l1, const Rational &l2) {
    return su11_verify(k, m12, su11_oracle_cgc(l1, l2, k + m12));
}

} // namespace parabose
