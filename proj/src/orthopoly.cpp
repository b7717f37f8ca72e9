#include "parabose/orthopoly.hpp"

#include <cmath>

namespace parabose {

namespace {

Rational checked_div(const Rational &num, const Rational &den, const char *what) {
    if (den == 0) throw DomainError(std::string("dm1h_data: vanishing denominator in ") + what);
    return num / den;
}

} // namespace

DensePoly<Rational> laguerre_poly(long n, const Rational &alpha) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    // L_n^a(x) = sum_i (-1)^i (a+i+1)_{n-i} / ((n-i)! i!) x^i
    std::vector<Rational> c(n + 1);
    for (long i = 0; i <= n; ++i)
        c[i] = sign_power(i) * pochhammer(alpha + i + 1, n - i) / (factorial(n - i) * Rational(factorial(i)));
    return DensePoly<Rational>(std::move(c));
}

DensePoly<Rational> jacobi_poly(long n, const Rational &alpha, const Rational &beta) {
    if (n < 0) throw std::invalid_argument("jacobi: negative degree");
    // (a+1)_n / n! 2F1(-n, n+a+b+1; a+1; t), t = (1-x)/2
    auto t = hypergeom_coefficients<Rational>({Rational(-n), n + alpha + beta + 1}, {alpha + 1});
    DensePoly<Rational> in_t(std::move(t));
    in_t *= pochhammer(alpha + 1, n) / Rational(factorial(n));
    return in_t.composed_linear(Rational(-1, 2), Rational(1, 2));
}

HermiteExact generalized_hermite_exact(long n, const Rational &mu) {
    if (n < 0) throw std::invalid_argument("generalized_hermite: negative degree");
    const long k = n / 2, p = n % 2;
    DensePoly<Rational> poly = laguerre_poly(k, mu - Rational(1, 2) + p).in_square().shifted(p);
    poly *= sign_power(k);
    Rational scale_sq = Rational(factorial(k)) / pochhammer(mu + Rational(1, 2), k + p);
    return {std::move(poly), scale_sq};
}

DensePoly<double> generalized_hermite(long n, const Rational &mu) {
    HermiteExact h = generalized_hermite_exact(n, mu);
    const double scale = std::sqrt(to_double(h.scale_sq) / std::tgamma(to_double(mu) + 0.5));
    return h.poly.cast<double>() * scale;
}

Rational dm1h_u(long n, const Rational &eta, const Rational &xi, long N) {
    return 4 * mu_number(n, xi) * mu_number(N - n + 1, eta);
}

Rational dm1h_b(long n, const Rational &eta, const Rational &xi, long N) {
    return 2 * (mu_number(n, xi) + mu_number(N - n, eta)) - 2 * eta - 2 * xi - 2 * N - 1;
}

std::vector<DensePoly<Rational>> dual_m1_hahn_family(const Rational &eta, const Rational &xi,
                                                     long N, long nmax) {
    if (N < 0 || nmax < 0 || nmax > N + 1)
        throw std::invalid_argument("dual_m1_hahn: degree outside 0..N+1");
    std::vector<DensePoly<Rational>> R;
    R.push_back(DensePoly<Rational>::constant(1));
    const DensePoly<Rational> x = DensePoly<Rational>::monomial(1);
    for (long n = 0; n < nmax; ++n) {
        DensePoly<Rational> next = x * R[n] - R[n] * dm1h_b(n, eta, xi, N);
        if (n > 0) next -= R[n - 1] * dm1h_u(n, eta, xi, N);
        R.push_back(std::move(next));
    }
    return R;
}

DensePoly<Rational> dual_m1_hahn(long n, const Rational &eta, const Rational &xi, long N) {
    return dual_m1_hahn_family(eta, xi, N, n).back();
}

Dm1hData dm1h_data(const Rational &eta, const Rational &xi, long N) {
    if (N < 0) throw std::invalid_argument("dm1h_data: negative N");
    if (eta <= 0 || xi <= 0) throw DomainError("dm1h_data: eta and xi must be positive");
    Dm1hData d;
    d.eta = eta;
    d.xi = xi;
    d.N = N;
    const Rational half(1, 2);
    const Rational hN(N, 2);
    if (N % 2 == 0) {
        d.kappa0 = checked_div(pochhammer(-eta - xi - N, N / 2),
                               pochhammer(half - xi - hN, N / 2), "kappa0");
        for (long s = 0; s <= N; ++s) d.grid.push_back(sign_power(s) * (-2 * eta - 2 * xi - 2 * N + 2 * s - 1));
        for (long j = 0; j <= N; ++j) {
            const long s = j / 2, q = j % 2;
            Rational num = sign_power(s) * pochhammer(-hN, s + q) * pochhammer(half - eta - hN, s) *
                           pochhammer(-eta - xi - N, s);
            Rational den = Rational(factorial(s)) * pochhammer(half - xi - hN, s) *
                           pochhammer(-eta - xi - hN, s + q);
            d.weights.push_back(checked_div(num, den, "weight"));
        }
    } else {
        const long h = (N + 1) / 2;
        d.kappa0 = checked_div(pochhammer(eta + xi + 1, h), pochhammer(eta + half, h), "kappa0");
        for (long s = 0; s <= N; ++s) d.grid.push_back(sign_power(s) * (2 * eta + 2 * xi + 2 * s + 1));
        for (long j = 0; j <= N; ++j) {
            const long s = j / 2, q = j % 2;
            Rational num = sign_power(s) * pochhammer(-Rational(N - 1, 2), s) *
                           pochhammer(xi + half, s + q) * pochhammer(eta + xi + 1, s);
            Rational den = Rational(factorial(s)) * pochhammer(eta + half, s + q) *
                           pochhammer(eta + xi + hN + 3 * half, s);
            d.weights.push_back(checked_div(num, den, "weight"));
        }
    }
    return d;
}

Rational dm1h_norm(long n, const Dm1hData &data) {
    Rational r = data.kappa0;
    for (long i = 1; i <= n; ++i) r *= dm1h_u(i, data.eta, data.xi, data.N);
    return r;
}

} // namespace parabose
