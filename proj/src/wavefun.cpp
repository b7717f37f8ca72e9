#include "parabose/wavefun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

namespace parabose {

namespace {

const Rational kHalf(1, 2);

double gamma_of(const Rational &a) { return std::tgamma(to_double(a)); }

template <class T> DensePoly<T> times_x(const DensePoly<T> &p) { return p.shifted(1); }

BiPoly<double> rho_sq_power(long k) {
    BiPoly<double> s(3, 3);
    s.c[2][0] = 1;
    s.c[0][2] = 1;
    BiPoly<double> r = BiPoly<double>::monomial(0, 0);
    for (long i = 0; i < k; ++i) r = r * s;
    return r;
}

// sum_i c_i (x^2 - y^2)^i (x^2 + y^2)^{n-i}, i.e. rho^{2n} P(cos 2 phi).
BiPoly<double> homogenize(const DensePoly<Rational> &P, long n) {
    BiPoly<double> d(3, 3);
    d.c[2][0] = 1;
    d.c[0][2] = -1;
    BiPoly<double> out(1, 1);
    BiPoly<double> dp = BiPoly<double>::monomial(0, 0);
    for (std::size_t i = 0; i < P.c.size(); ++i) {
        out += dp * rho_sq_power(n - static_cast<long>(i)) * to_double(P.c[i]);
        dp = dp * d;
    }
    return out;
}

// sum_i L_i (x^2 + y^2)^i.
BiPoly<double> radial_in_rho_sq(const DensePoly<Rational> &L) {
    BiPoly<double> out(1, 1);
    for (std::size_t i = 0; i < L.c.size(); ++i) out += rho_sq_power(static_cast<long>(i)) * to_double(L.c[i]);
    return out;
}

// Coefficients in (total degree, power of x) order, padded to degree dmax.
DensePoly<double> flatten(const BiPoly<double> &P, long dmax) {
    std::vector<double> v;
    for (long d = 0; d <= dmax; ++d)
        for (long i = 0; i <= d; ++i) v.push_back(P.at(i, d - i));
    return DensePoly<double>(std::move(v));
}

} // namespace

GaussianPoly1D realize_apply(Generator g, const GaussianPoly1D &f) {
    const double r2 = std::sqrt(2.0);
    switch (g) {
    case Generator::J0: {
        DensePoly<double> d2 = dunkl_poly(dunkl_poly(f.poly, f.rep.mu), f.rep.mu);
        return {(times_x(times_x(f.poly)) - d2) * 0.5, f.rep};
    }
    case Generator::Jplus: return {(times_x(f.poly) - dunkl_poly(f.poly, f.rep.mu)) * (1 / r2), f.rep};
    case Generator::Jminus: return {(times_x(f.poly) + dunkl_poly(f.poly, f.rep.mu)) * (1 / r2), f.rep};
    case Generator::R: return {f.poly.reflected(), f.rep};
    default: throw std::invalid_argument("realize_apply: only J0, J+, J-, R are realized");
    }
}

RealizedExact realize_apply_exact(Generator g, const GaussianPoly1DT<Rational> &f) {
    switch (g) {
    case Generator::J0: {
        DensePoly<Rational> d2 = dunkl_poly(dunkl_poly(f.poly, f.rep.mu), f.rep.mu);
        return {(times_x(times_x(f.poly)) - d2) * kHalf, 0};
    }
    case Generator::Jplus: return {times_x(f.poly) - dunkl_poly(f.poly, f.rep.mu), 1};
    case Generator::Jminus: return {times_x(f.poly) + dunkl_poly(f.poly, f.rep.mu), 1};
    case Generator::R: return {f.poly.reflected(), 0};
    default: throw std::invalid_argument("realize_apply: only J0, J+, J-, R are realized");
    }
}

GaussianPoly1D psi1d(long n, const Rational &mu) { return {generalized_hermite(n, mu), RepLabel{mu, 1}}; }

double psi1d_overlap(long n, long m, const Rational &mu) {
    if ((n + m) % 2 != 0) return 0.0;
    const DensePoly<double> h = generalized_hermite(n, mu) * generalized_hermite(m, mu);
    const double a = 2 * to_double(mu) + static_cast<double>(n + m);
    double bound = 0;
    for (double v : h.c) bound += std::abs(v);
    // For L >= 1 and L^2 >= a the tail is below 2 bound L^{a-1} e^{-L^2}.
    double L = 4;
    while (L * L < a || 2 * bound * std::pow(L, a - 1) * std::exp(-L * L) >= 1e-13) L += 0.5;
    const double mu_d = to_double(mu);
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [&](double x) { return std::pow(x, 2 * mu_d) * std::exp(-x * x) * h(x); };
    return 2 * integrator.integrate(f, 0.0, L);
}

double eigen_residual(const BiPoly<double> &a, const BiPoly<double> &b, double lambda) {
    const std::size_t nx = std::max(a.nx(), b.nx()), ny = std::max(a.ny(), b.ny());
    double r = 0;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) r = std::max(r, std::abs(a.at(i, j) - lambda * b.at(i, j)));
    return r;
}

double AsymptoticNorms::lambda(long n, const Rational &mu) {
    const long m = n / 2;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    Rational g = Rational(n + 1, 2) + mu;
    if (n % 2 == 1) g = Rational(n, 2) + mu + 1;
    return sign * std::sqrt(2 / (gamma_of(g) * to_double(Rational(factorial(m)))));
}

double AsymptoticNorms::hermite_leading(long n, const Rational &mu) {
    const long m = n / 2;
    Rational g = Rational(n, 2) + mu + kHalf;
    if (n % 2 == 1) g = Rational(n + 1, 2) + mu + kHalf;
    return 1 / std::sqrt(gamma_of(g) * to_double(Rational(factorial(m))));
}

double AsymptoticNorms::xi(long h, const Rational &mu1, const Rational &mu2) {
    return std::sqrt(to_double(Rational(factorial(h))) * gamma_of(h + mu1 + mu2 + 1) /
                     (2 * gamma_of(h + mu1 + kHalf) * gamma_of(h + mu2 + kHalf)));
}

BiPoly<double> angular_polynomial(bool n12_even, long j, const Rational &mu1, const Rational &mu2) {
    if (j < 0) throw std::invalid_argument("angular_polynomial: negative j");
    const double m1 = to_double(mu1), m2 = to_double(mu2);
    const BiPoly<double> X = BiPoly<double>::monomial(1, 0), Y = BiPoly<double>::monomial(0, 1),
                         XY = BiPoly<double>::monomial(1, 1);
    if (n12_even && j % 2 == 0) {
        const long h = j / 2;
        BiPoly<double> A = homogenize(jacobi_poly(h, mu2 - kHalf, mu1 - kHalf), h);
        if (h > 0) A -= XY * homogenize(jacobi_poly(h - 1, mu2 + kHalf, mu1 + kHalf), h - 1);
        return A * AsymptoticNorms::xi(h, mu1, mu2);
    }
    if (!n12_even && j % 2 == 1) {
        const long h = (j - 1) / 2;
        const double r = std::sqrt((h + 1) / (h + m1 + m2 + 1));
        BiPoly<double> A = homogenize(jacobi_poly(h + 1, mu2 - kHalf, mu1 - kHalf), h + 1) * r +
                           XY * homogenize(jacobi_poly(h, mu2 + kHalf, mu1 + kHalf), h) * (1 / r);
        return A * AsymptoticNorms::xi(h + 1, mu1, mu2);
    }
    if (!n12_even) {
        const long h = j / 2;
        BiPoly<double> A = Y * homogenize(jacobi_poly(h, mu2 + kHalf, mu1 - kHalf), h) +
                           X * homogenize(jacobi_poly(h, mu2 - kHalf, mu1 + kHalf), h);
        return A * AsymptoticNorms::xi(h, mu1, mu2);
    }
    const long h = (j - 1) / 2;
    const double r = std::sqrt((h + m1 + 0.5) / (h + m2 + 0.5));
    BiPoly<double> A = Y * homogenize(jacobi_poly(h, mu2 + kHalf, mu1 - kHalf), h) * r -
                       X * homogenize(jacobi_poly(h, mu2 - kHalf, mu1 + kHalf), h) * (1 / r);
    return A * AsymptoticNorms::xi(h, mu1, mu2);
}

GaussianPoly2D coupled_psi(long n12, long j, const Rational &mu1, const Rational &mu2) {
    if (n12 < 0 || j < 0) throw std::invalid_argument("coupled_psi: negative label");
    const bool even = n12 % 2 == 0;
    const long m = even ? n12 / 2 : (n12 - 1) / 2;
    Rational alpha = j + mu1 + mu2;
    if (!even) alpha += 1;
    const double radial_norm = std::sqrt(2 * to_double(Rational(factorial(m))) / gamma_of(m + alpha + 1));
    BiPoly<double> P = radial_in_rho_sq(laguerre_poly(m, alpha)) * angular_polynomial(even, j, mu1, mu2);
    return {P * radial_norm, mu1, mu2};
}

BiPoly<double> homogeneous_part(const BiPoly<double> &P, long d) {
    BiPoly<double> r(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(d + 1));
    for (long i = 0; i <= d; ++i) r.c[i][d - i] = P.at(i, d - i);
    return r;
}

DecompositionCheck decomposition_residual(long n12, long j, const CgcTable &table, long drop_term) {
    const Rational &mu1 = table.r1.mu, &mu2 = table.r2.mu;
    if (table.r1.eps != 1 || table.r2.eps != 1)
        throw DomainError("decomposition_residual: wavefunctions are realized for eps = +1 only");
    const long E = n12 + j;
    BiPoly<double> sum(1, 1);
    for (long n = 0; n <= E; ++n) {
        if (n == drop_term) continue;
        sum += BiPoly<double>::outer(generalized_hermite(n, mu1), generalized_hermite(E - n, mu2)) *
               table.coeff(n, E - n, n12, j);
    }
    const GaussianPoly2D psi = coupled_psi(n12, j, mu1, mu2);
    const MatchedComparison m = compare_matched(flatten(psi.poly, E), flatten(sum, E));
    return {m.residual, m.absorbed_constant};
}

DecompositionCheck decomposition_residual(long n12, long j, const Rational &mu1, const Rational &mu2,
                                          long drop_term) {
    return decomposition_residual(n12, j, oracle_cgc(RepLabel{mu1, 1}, RepLabel{mu2, 1}, n12 + j), drop_term);
}

DensePoly<double> angular_genfun_coeffs(long n12, long j, const Rational &mu1, const Rational &mu2) {
    if (n12 < 0 || j < 0) throw std::invalid_argument("angular_genfun: negative label");
    const Rational hj(j, 2);
    const Rational c1 = kHalf + mu1, c2 = Rational(3, 2) + mu1, d = 1 + 2 * mu1;
    const DensePoly<Rational> z = DensePoly<Rational>::monomial(1);
    DensePoly<Rational> bracket;
    Rational rational_pre;
    double irrational_pre;
    long k;
    if (n12 % 2 == 0) {
        k = n12 / 2;
        if (j % 2 == 0) {
            const long h = j / 2;
            bracket = f21_in_minus_square(Rational(-h), kHalf - hj - mu2, c1);
            if (j > 0) bracket += z * f21_in_minus_square(Rational(1 - h), kHalf - hj - mu2, c2) * (Rational(j) / d);
            rational_pre = sign_power(h) * pochhammer(c1, h) / Rational(factorial(h));
            irrational_pre = AsymptoticNorms::xi(h, mu1, mu2);
        } else {
            const long h = (j - 1) / 2;
            bracket = f21_in_minus_square(Rational(-h), -hj - mu2, c1) -
                      z * f21_in_minus_square(Rational(-h), 1 - hj - mu2, c2) * Rational((j + 2 * mu2) / d);
            rational_pre = sign_power(h) * pochhammer(c1, h) / Rational(factorial(h));
            irrational_pre = AsymptoticNorms::xi(h, mu1, mu2) * std::sqrt(to_double((h + c1) / (h + kHalf + mu2)));
        }
    } else {
        k = (n12 - 1) / 2;
        if (j % 2 == 0) {
            const long h = j / 2;
            bracket = f21_in_minus_square(Rational(-h), -hj - mu2 - kHalf, c1) +
                      z * f21_in_minus_square(Rational(-h), kHalf - hj - mu2, c2) * Rational((j + 1 + 2 * mu1) / d);
            rational_pre = sign_power(h) * pochhammer(c1, h) / Rational(factorial(h));
            irrational_pre = AsymptoticNorms::xi(h, mu1, mu2);
        } else {
            const long h = (j + 1) / 2;
            const Rational hm(j - 1, 2);
            bracket = f21_in_minus_square(Rational(-h), -hj - mu2, c1) -
                      z * f21_in_minus_square(-hm, -hj - mu2, c2) * Rational((j + 2 * mu1 + 2 * mu2 + 1) / d);
            rational_pre = sign_power(h) * pochhammer(c1, h) / Rational(factorial(h));
            irrational_pre = AsymptoticNorms::xi(h, mu1, mu2) * std::sqrt(to_double((hm + 1) / (hm + mu1 + mu2 + 1)));
        }
    }
    const DensePoly<Rational> exact = one_plus_square_power<Rational>(k) * bracket * rational_pre;
    const double pre = irrational_pre * AsymptoticNorms::lambda(n12, coupled_mu(j, RepLabel{mu1, 1}, RepLabel{mu2, 1}));
    std::vector<double> out;
    for (const auto &v : exact.c) out.push_back(to_double(v) * pre);
    return DensePoly<double>(std::move(out));
}

double angular_genfun(double z, long n12, long j, const Rational &mu1, const Rational &mu2) {
    return angular_genfun_coeffs(n12, j, mu1, mu2)(z);
}

DensePoly<double> angular_series_coeffs(long n12, long j, const CgcTable &table) {
    const long E = n12 + j;
    std::vector<double> out(E + 1);
    for (long n = 0; n <= E; ++n)
        out[n] = table.coeff(n, E - n, n12, j) * AsymptoticNorms::hermite_leading(n, table.r1.mu) *
                 AsymptoticNorms::hermite_leading(E - n, table.r2.mu);
    return DensePoly<double>(std::move(out));
}

} // namespace parabose
