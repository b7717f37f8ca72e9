#pragma once

#include "parabose/core_arith.hpp"
#include "parabose/poly.hpp"

#include <cmath>
#include <vector>

namespace parabose {

// Terminating generalized hypergeometric series pFq(num; den; z).
template <class T> struct HypergeomSpec {
    std::vector<T> numerator_params;
    std::vector<T> denominator_params;
    T argument;
};

namespace detail {

inline bool nonpositive_integer(const Rational &a) { return is_nonpositive_integer(a); }
inline bool nonpositive_integer(double a) { return a <= 0 && std::floor(a) == a; }
inline long as_index(const Rational &a) { return to_long(a); }
inline long as_index(double a) { return static_cast<long>(a); }
inline bool is_zero(const Rational &a) { return a == 0; }
inline bool is_zero(double a) { return a == 0.0; }

} // namespace detail

// Index M at which the series terminates: min(-a) over numerator parameters
// that are non-positive integers. Throws DomainError if none is.
template <class T> long hypergeom_termination(const std::vector<T> &num) {
    long m = -1;
    for (const auto &a : num)
        if (detail::nonpositive_integer(a)) {
            long t = -detail::as_index(a);
            m = (m < 0) ? t : std::min(m, t);
        }
    if (m < 0) throw DomainError("hypergeometric series does not terminate");
    return m;
}

// Coefficients t_m of sum_m t_m z^m, m = 0..M.
template <class T>
std::vector<T> hypergeom_coefficients(const std::vector<T> &num, const std::vector<T> &den) {
    long M = hypergeom_termination(num);
    std::vector<T> out;
    out.reserve(M + 1);
    T t(1);
    for (long m = 0;; ++m) {
        out.push_back(t);
        if (m == M) break;
        for (const auto &a : num) t *= a + T(m);
        for (const auto &d : den) {
            if (detail::is_zero(d + T(m)))
                throw DomainError("hypergeometric denominator parameter reaches zero");
            t /= d + T(m);
        }
        t /= T(m + 1);
    }
    return out;
}

template <class T> T hypergeom(const HypergeomSpec<T> &spec) {
    auto coeffs = hypergeom_coefficients(spec.numerator_params, spec.denominator_params);
    T r(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * spec.argument + *it;
    return r;
}

// Laguerre polynomial L_n^alpha as exact coefficients in x.
DensePoly<Rational> laguerre_poly(long n, const Rational &alpha);

template <class T> T laguerre(long n, const Rational &alpha, const T &x) {
    return laguerre_poly(n, alpha)(x);
}

// Jacobi polynomial P_n^(alpha,beta) as exact coefficients in x.
DensePoly<Rational> jacobi_poly(long n, const Rational &alpha, const Rational &beta);

template <class T> T jacobi(long n, const Rational &alpha, const Rational &beta, const T &x) {
    return jacobi_poly(n, alpha, beta)(x);
}

// Generalized Hermite polynomial H_n^mu, n = 2k+p:
// (-1)^k sqrt(k!/Gamma(k+p+mu+1/2)) x^p L_k^{mu-1/2+p}(x^2).
DensePoly<double> generalized_hermite(long n, const Rational &mu);

// Exact form of H_n^mu: H_n^mu = sqrt(scale_sq / Gamma(mu+1/2)) * poly with
// poly = (-1)^k x^p L_k^{mu-1/2+p}(x^2) and scale_sq = k! / (mu+1/2)_{k+p}.
struct HermiteExact {
    DensePoly<Rational> poly;
    Rational scale_sq;
};
HermiteExact generalized_hermite_exact(long n, const Rational &mu);

// Recurrence coefficients of the monic dual -1 Hahn polynomials.
Rational dm1h_u(long n, const Rational &eta, const Rational &xi, long N);
Rational dm1h_b(long n, const Rational &eta, const Rational &xi, long N);

// R_0 .. R_nmax from the three-term recurrence (nmax <= N+1).
std::vector<DensePoly<Rational>> dual_m1_hahn_family(const Rational &eta, const Rational &xi,
                                                     long N, long nmax);
DensePoly<Rational> dual_m1_hahn(long n, const Rational &eta, const Rational &xi, long N);

// R_n evaluated at y through the explicit 3F2 representation.
template <class T>
T dual_m1_hahn_hyper(long n, const T &y, const Rational &eta_r, const Rational &xi_r, long N);

struct Dm1hData {
    Rational eta, xi;
    long N = 0;
    std::vector<Rational> grid;
    std::vector<Rational> weights;
    Rational kappa0;
};

Dm1hData dm1h_data(const Rational &eta, const Rational &xi, long N);

// kappa0 u_1 ... u_n, the squared norm of R_n.
Rational dm1h_norm(long n, const Dm1hData &data);

// ---- implementation of the 3F2 route ----

namespace detail {

template <class T> T from_rational(const Rational &r) {
    if constexpr (std::is_same_v<T, double>)
        return to_double(r);
    else
        return T(r);
}

template <class T> T pochhammer_t(const T &a, long n) {
    T r(1);
    for (long i = 0; i < n; ++i) r *= a + T(i);
    return r;
}

} // namespace detail

template <class T>
T dual_m1_hahn_hyper(long n, const T &y, const Rational &eta_r, const Rational &xi_r, long N) {
    if (n < 0 || n > N) throw DomainError("dual_m1_hahn_hyper: degree outside 0..N");
    using detail::from_rational;
    const T eta = from_rational<T>(eta_r), xi = from_rational<T>(xi_r);
    const T one(1), two(2), four(4), half = from_rational<T>(Rational(1, 2));
    const T x = y + one;
    const long k = n / 2;
    const T sixteen_k = from_rational<T>(Rational(Integer(1) << (4 * k)));
    std::vector<T> num, den;
    T gamma, tail(1);
    if (N % 2 == 0) {
        const T NN = from_rational<T>(Rational(N));
        const T delta = (eta + xi + NN) / two;
        const T b = (one - two * eta - NN) / two;
        T a = -NN / two;
        if (n % 2 == 1) a += one;
        gamma = sixteen_k * detail::pochhammer_t(a, k) * detail::pochhammer_t(b, k);
        num = {T(-k), T(-delta + x / four), T(-delta - x / four)};
        den = {a, b};
        if (n % 2 == 1) tail = x + two * eta + two * xi;
    } else {
        const T NN = from_rational<T>(Rational(N));
        const T delta = (eta + xi + one) / two;
        const T a = (one - NN) / two;
        T b = xi + half;
        if (n % 2 == 1) b += one;
        gamma = sixteen_k * detail::pochhammer_t(a, k) * detail::pochhammer_t(b, k);
        num = {T(-k), T(delta + x / four), T(delta - x / four)};
        den = {a, b};
        if (n % 2 == 1) tail = x - two * eta + two * xi;
    }
    return gamma * hypergeom(HypergeomSpec<T>{num, den, one}) * tail;
}

} // namespace parabose
