#pragma once

#include "parabose/genfun.hpp"
#include "parabose/orthopoly.hpp"
#include "parabose/osp_rep.hpp"
#include "parabose/poly.hpp"

namespace parabose {

// poly(x) exp(-x^2/2) in the representation rep (only rep.mu enters).
template <class T> struct GaussianPoly1DT {
    DensePoly<T> poly;
    RepLabel rep;
};
using GaussianPoly1D = GaussianPoly1DT<double>;

// poly(x, y) exp(-(x^2+y^2)/2) with Dunkl parameters mu1 (in x) and mu2 (in y).
template <class T> struct GaussianPoly2DT {
    BiPoly<T> poly;
    Rational mu1, mu2;
};
using GaussianPoly2D = GaussianPoly2DT<double>;

// p -> p' - x p + mu (p(x) - p(-x)) / x on the polynomial part.
template <class T> DensePoly<T> dunkl_poly(const DensePoly<T> &p, const Rational &mu) {
    const T m = detail::from_rational<T>(mu);
    std::vector<T> r(p.c.size() + 1, T(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i > 0) r[i - 1] += p.c[i] * T(static_cast<long>(i));
        if (i % 2 == 1) r[i - 1] += T(2) * m * p.c[i];
        r[i + 1] -= p.c[i];
    }
    return DensePoly<T>(std::move(r));
}

template <class T> GaussianPoly1DT<T> dunkl_apply(const GaussianPoly1DT<T> &f) {
    return {dunkl_poly(f.poly, f.rep.mu), f.rep};
}

// J0 = -D^2/2 + x^2/2, J+- = (x -+ D)/sqrt(2), R = P_x on the float path.
GaussianPoly1D realize_apply(Generator g, const GaussianPoly1D &f);

// Exact counterpart: the result equals 2^{-inv_sqrt2/2} * poly * exp(-x^2/2).
struct RealizedExact {
    DensePoly<Rational> poly;
    long inv_sqrt2 = 0;
};
RealizedExact realize_apply_exact(Generator g, const GaussianPoly1DT<Rational> &f);

// psi_n^mu(x) = exp(-x^2/2) H_n^mu(x).
GaussianPoly1D psi1d(long n, const Rational &mu);

// 2 * integral_0^L x^{2mu} e^{-x^2} H_n H_m dx for n + m even (zero otherwise),
// L chosen so the neglected tail is below 1e-12.
double psi1d_overlap(long n, long m, const Rational &mu);

// Bivariate helpers on polynomial parts.
template <class T> BiPoly<T> dunkl_x(const BiPoly<T> &P, const Rational &mu) {
    const T m = detail::from_rational<T>(mu);
    BiPoly<T> r(P.nx() + 1, P.ny());
    for (std::size_t i = 0; i < P.nx(); ++i)
        for (std::size_t j = 0; j < P.ny(); ++j) {
            const T &c = P.c[i][j];
            if (c == T(0)) continue;
            if (i > 0) r.c[i - 1][j] += c * T(static_cast<long>(i));
            if (i % 2 == 1) r.c[i - 1][j] += T(2) * m * c;
            r.c[i + 1][j] -= c;
        }
    return r;
}
template <class T> BiPoly<T> dunkl_y(const BiPoly<T> &P, const Rational &mu) {
    return dunkl_x(P.transposed(), mu).transposed();
}
template <class T> BiPoly<T> reflect_x(BiPoly<T> P) {
    for (std::size_t i = 1; i < P.nx(); i += 2)
        for (auto &v : P.c[i]) v = -v;
    return P;
}
template <class T> BiPoly<T> reflect_y(const BiPoly<T> &P) { return reflect_x(P.transposed()).transposed(); }
template <class T> BiPoly<T> mul_x(const BiPoly<T> &P) { return BiPoly<T>::monomial(1, 0) * P; }
template <class T> BiPoly<T> mul_y(const BiPoly<T> &P) { return BiPoly<T>::monomial(0, 1) * P; }

// (y D_x - x D_y) P_x - mu1 P_y - mu2 P_x - P_x P_y / 2, with P_x acting first
// in the leading term.
template <class T> GaussianPoly2DT<T> casimir2d_apply(const GaussianPoly2DT<T> &f) {
    const BiPoly<T> q = reflect_x(f.poly);
    BiPoly<T> r = mul_y(dunkl_x(q, f.mu1)) - mul_x(dunkl_y(q, f.mu2));
    r -= reflect_y(f.poly) * detail::from_rational<T>(f.mu1);
    r -= reflect_x(f.poly) * detail::from_rational<T>(f.mu2);
    r -= reflect_x(reflect_y(f.poly)) * detail::from_rational<T>(Rational(1, 2));
    return {std::move(r), f.mu1, f.mu2};
}

// H_xy = -D_x^2/2 + x^2/2 - D_y^2/2 + y^2/2.
template <class T> GaussianPoly2DT<T> hamiltonian2d_apply(const GaussianPoly2DT<T> &f) {
    const T half = detail::from_rational<T>(Rational(1, 2));
    BiPoly<T> r = mul_x(mul_x(f.poly)) + mul_y(mul_y(f.poly));
    r -= dunkl_x(dunkl_x(f.poly, f.mu1), f.mu1);
    r -= dunkl_y(dunkl_y(f.poly, f.mu2), f.mu2);
    return {r * half, f.mu1, f.mu2};
}

// Largest |a - lambda b| coefficient.
double eigen_residual(const BiPoly<double> &a, const BiPoly<double> &b, double lambda);

// Normalizations of the leading terms.
struct AsymptoticNorms {
    // Radial leading factor, sign (-1)^{floor(n/2)} included.
    static double lambda(long n, const Rational &mu);
    // Leading coefficient of H_n^mu.
    static double hermite_leading(long n, const Rational &mu);
    // sqrt(h! Gamma(h+mu1+mu2+1) / (2 Gamma(h+mu1+1/2) Gamma(h+mu2+1/2))).
    static double xi(long h, const Rational &mu1, const Rational &mu2);
};

// Homogeneous angular polynomial of degree j (n12 even) or j+1 (n12 odd)
// including its xi normalization.
BiPoly<double> angular_polynomial(bool n12_even, long j, const Rational &mu1, const Rational &mu2);

// Radial part times angular part, in Cartesian form, eps = +1.
GaussianPoly2D coupled_psi(long n12, long j, const Rational &mu1, const Rational &mu2);

// Degree-d homogeneous component.
BiPoly<double> homogeneous_part(const BiPoly<double> &P, long d);

struct DecompositionCheck {
    double residual = 0;
    double absorbed_constant = 1;
};

// Psi_{n12,j} - c * sum_n C^{n,E-n}_{n12,j} psi_n(x) psi_{E-n}(y) with the
// oracle CGC (eps = +1) and c matched at the lowest nonvanishing coefficient.
// drop_term >= 0 omits that n from the sum (sensitivity probe).
DecompositionCheck decomposition_residual(long n12, long j, const Rational &mu1, const Rational &mu2,
                                          long drop_term = -1);
DecompositionCheck decomposition_residual(long n12, long j, const CgcTable &table, long drop_term = -1);

// Closed form in z = cot(phi) of the angular generating function, as a
// polynomial, with the radial factor lambda(n12, mu12) included.
DensePoly<double> angular_genfun_coeffs(long n12, long j, const Rational &mu1, const Rational &mu2);
double angular_genfun(double z, long n12, long j, const Rational &mu1, const Rational &mu2);

// sum_n C^{n,E-n}_{n12,j} N_mu1(n) N_mu2(E-n) z^n from a CGC table.
DensePoly<double> angular_series_coeffs(long n12, long j, const CgcTable &table);

} // namespace parabose
