#include "doctest.h"
#include "parabose/wavefun.hpp"

#include <cmath>
#include <random>

using namespace parabose;

namespace {

const std::vector<Rational> grid4{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(3, 2)};

double max_diff(const DensePoly<double> &a, const DensePoly<double> &b) {
    double m = 0;
    const std::size_t n = std::max(a.c.size(), b.c.size());
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
    return m;
}

const BiPoly<double> rho_sq = BiPoly<double>::monomial(2, 0) + BiPoly<double>::monomial(0, 2);

DensePoly<Rational> rpoly(std::vector<Rational> v) { return DensePoly<Rational>(std::move(v)); }

} // namespace

TEST_CASE("Dunkl derivative examples") {
    const Rational mu(3, 4);
    const GaussianPoly1DT<Rational> one{DensePoly<Rational>::constant(1), RepLabel{mu, 1}};
    CHECK(dunkl_apply(one).poly == rpoly({0, -1}));
    const GaussianPoly1DT<Rational> x{DensePoly<Rational>::monomial(1), RepLabel{mu, 1}};
    CHECK(dunkl_apply(x).poly == rpoly({1 + 2 * mu, 0, -1}));
    CHECK(dunkl_apply(dunkl_apply(one)).poly == rpoly({-1 - 2 * mu, 0, 1}));
}

TEST_CASE("realization on the lowest states") {
    for (const auto &mu : grid4) {
        const auto p0 = psi1d(0, mu), p1 = psi1d(1, mu);
        CHECK(max_diff(realize_apply(Generator::J0, p0).poly, p0.poly * (to_double(mu) + 0.5)) <= 1e-13);
        CHECK(max_diff(realize_apply(Generator::Jminus, p1).poly,
                       p0.poly * std::sqrt(to_double(mu_number(1, mu)))) <= 1e-13);
        for (long n = 0; n <= 6; ++n) {
            const auto p = psi1d(n, mu);
            CHECK(max_diff(realize_apply(Generator::R, p).poly, p.poly * (n % 2 ? -1.0 : 1.0)) == 0.0);
        }
    }
    CHECK(psi1d(0, Rational(1, 2)).poly == DensePoly<double>::constant(1.0));
    CHECK_THROWS_AS(realize_apply(Generator::C, psi1d(0, Rational(1, 2))), std::invalid_argument);
}

TEST_CASE("ladder actions on psi_n") {
    for (const auto &mu : grid4)
        for (long n = 0; n <= 8; ++n) {
            const auto p = psi1d(n, mu), q = psi1d(n + 1, mu);
            const double up = std::sqrt(to_double(mu_number(n + 1, mu)));
            REQUIRE(max_diff(realize_apply(Generator::Jplus, p).poly, q.poly * up) <= 1e-11);
            REQUIRE(max_diff(realize_apply(Generator::Jminus, q).poly, p.poly * up) <= 1e-11);
            REQUIRE(max_diff(realize_apply(Generator::J0, p).poly, p.poly * (n + to_double(mu) + 0.5)) <= 1e-11);
        }
}

TEST_CASE("ladder actions exactly in the rational part") {
    for (const auto &mu : grid4)
        for (long n = 0; n <= 8; ++n) {
            const auto hn = generalized_hermite_exact(n, mu), hm = generalized_hermite_exact(n + 1, mu);
            const auto r = realize_apply_exact(Generator::Jplus, {hn.poly, RepLabel{mu, 1}});
            REQUIRE(r.inv_sqrt2 == 1);
            // r.poly = lambda hm.poly with lambda^2 = 2 [n+1] scale_{n+1} / scale_n.
            const Rational lambda = r.poly.c.back() / hm.poly.c.back();
            REQUIRE(r.poly == hm.poly * lambda);
            REQUIRE(lambda > 0);
            REQUIRE(lambda * lambda * hn.scale_sq == 2 * mu_number(n + 1, mu) * hm.scale_sq);
        }
}

TEST_CASE("anticommutator of the odd generators on random states") {
    std::mt19937 rng(11);
    std::normal_distribution<double> g;
    for (const auto &mu : grid4)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> c(1 + trial % 9);
            for (double &v : c) v = g(rng);
            const GaussianPoly1D f{DensePoly<double>(c), RepLabel{mu, 1}};
            const auto a = realize_apply(Generator::Jplus, realize_apply(Generator::Jminus, f)).poly +
                           realize_apply(Generator::Jminus, realize_apply(Generator::Jplus, f)).poly;
            REQUIRE(max_diff(a, realize_apply(Generator::J0, f).poly * 2.0) <= 1e-11);
        }
}

TEST_CASE("orthonormality by quadrature") {
    for (const auto &mu : grid4)
        for (long n = 0; n <= 6; ++n)
            for (long m = 0; m <= 6; ++m) REQUIRE(std::abs(psi1d_overlap(n, m, mu) - (n == m ? 1.0 : 0.0)) <= 1e-8);
}

TEST_CASE("coupled wavefunctions: eigenvalues and degree") {
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4)
            for (long E = 0; E <= 8; ++E)
                for (long j = 0; j <= E; ++j) {
                    const long n12 = E - j;
                    const auto psi = coupled_psi(n12, j, m1, m2);
                    REQUIRE(psi.poly.total_degree() == E);
                    const double mu12 = to_double(m1 + m2) + 0.5 + j;
                    REQUIRE(eigen_residual(hamiltonian2d_apply(psi).poly, psi.poly, n12 + mu12 + 0.5) <= 1e-11);
                    const double eps12 = (j % 2 == 0) ? 1.0 : -1.0;
                    REQUIRE(eigen_residual(casimir2d_apply(psi).poly, psi.poly, -eps12 * mu12) <= 1e-11);
                    // Leading term: lambda rho^{2 floor(n12/2)} times the angular polynomial.
                    const BiPoly<double> top = homogeneous_part(psi.poly, E);
                    BiPoly<double> expect =
                        angular_polynomial(n12 % 2 == 0, j, m1, m2) *
                        AsymptoticNorms::lambda(n12, coupled_mu(j, RepLabel{m1, 1}, RepLabel{m2, 1}));
                    for (long k = 0; k < n12 / 2; ++k) expect = expect * rho_sq;
                    REQUIRE(eigen_residual(top, expect, 1.0) <= 1e-11);
                }
}

TEST_CASE("Casimir on the product ground state and linearity") {
    const Rational m1(1, 4), m2(3, 2);
    const GaussianPoly2D g{BiPoly<double>::monomial(0, 0), m1, m2};
    CHECK(eigen_residual(casimir2d_apply(g).poly, g.poly, -to_double(m1 + m2 + Rational(1, 2))) <= 1e-15);
    const auto a = coupled_psi(2, 1, m1, m2), b = coupled_psi(1, 3, m1, m2);
    const GaussianPoly2D s{a.poly * 0.3 + b.poly * -1.7, m1, m2};
    const auto lhs = casimir2d_apply(s).poly;
    const auto rhs = casimir2d_apply(a).poly * 0.3 + casimir2d_apply(b).poly * -1.7;
    CHECK(eigen_residual(lhs, rhs, 1.0) <= 1e-12);
}

TEST_CASE("decomposition into products of one-dimensional states") {
    CHECK(decomposition_residual(0, 0, Rational(1, 2), Rational(1, 2)).residual <= 1e-12);
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4) {
            const auto table = oracle_cgc(RepLabel{m1, 1}, RepLabel{m2, 1}, 8);
            for (long E = 0; E <= 8; ++E)
                for (long j = 0; j <= E; ++j) {
                    const auto d = decomposition_residual(E - j, j, table);
                    REQUIRE(d.residual <= 1e-10);
                    REQUIRE(std::abs(std::abs(d.absorbed_constant) - 1) <= 1e-10);
                }
        }
    const auto probe = decomposition_residual(2, 2, Rational(1, 2), Rational(3, 4), 1);
    CHECK(probe.residual > 1e-3);
}

TEST_CASE("angular generating function") {
    const Rational h(1, 2);
    const auto t0 = oracle_cgc(RepLabel{h, 1}, RepLabel{h, 1}, 0);
    CHECK(angular_genfun(0.7, 0, 0, h, h) ==
          doctest::Approx(angular_series_coeffs(0, 0, t0)(0.7)).epsilon(1e-13));
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4) {
            const RepLabel r1{m1, 1}, r2{m2, 1};
            const auto table = oracle_cgc(r1, r2, 8);
            for (long E = 0; E <= 8; ++E)
                for (long j = 0; j <= E; ++j) {
                    const long n12 = E - j;
                    const auto m = compare_matched(angular_series_coeffs(n12, j, table),
                                                   angular_genfun_coeffs(n12, j, m1, m2));
                    REQUIRE(m.residual <= 1e-10);
                    REQUIRE(std::abs(std::abs(m.absorbed_constant) - 1) <= 1e-10);
                    // Proportional to the algebraic generating function.
                    const GenFunCase c{n12, j, r1, r2};
                    const auto p = compare_matched(genfun_rhs_coeffs(c), angular_genfun_coeffs(n12, j, m1, m2));
                    REQUIRE(p.residual <= 1e-10);
                    const double expect = std::sqrt(std::tgamma(to_double(m1) + 0.5) *
                                                    std::tgamma(to_double(m2) + 0.5) / std::pow(2.0, E)) /
                                          genfun_expected_constant(c);
                    REQUIRE(std::abs(std::abs(p.absorbed_constant) - expect) <= 1e-10 * expect);
                }
        }
}
