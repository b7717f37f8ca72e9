#include "doctest.h"
#include "parabose/genfun.hpp"

#include <cmath>

using namespace parabose;

namespace {

const std::vector<Rational> grid4{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(3, 2)};

} // namespace

TEST_CASE("hypergeometric bracket examples") {
    const RepLabel r1{Rational(3, 4), 1};
    for (int e2 : {1, -1}) {
        const RepLabel r2{Rational(1, 4), e2};
        CHECK(hypergeom_sum({0, 0, r1, r2}) == DensePoly<Rational>::constant(1));
        CHECK(hypergeom_sum({1, 0, r1, r2}) == DensePoly<Rational>(std::vector<Rational>{1, Rational(e2)}));
    }
}

TEST_CASE("bracket equals the direct finite sum exactly") {
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4)
            for (int e2 : {1, -1})
                for (long n12 : {0L, 1L, 2L, 3L})
                    for (long j = 0; j <= 8; ++j) {
                        const GenFunCase c{n12, j, RepLabel{m1, 1}, RepLabel{m2, e2}};
                        REQUIRE(hypergeom_sum(c) == hypergeom_sum_direct(c));
                        REQUIRE(hypergeom_sum(c).degree() <= j + 1);
                    }
}

TEST_CASE("right-hand side examples") {
    const RepLabel h{Rational(1, 2), 1};
    CHECK(genfun_rhs({0, 0, h, h}, 0.37) == doctest::Approx(1.0));
    const RepLabel r1{Rational(1, 2), 1}, r2{Rational(1, 4), 1};
    for (long j = 0; j <= 4; ++j) {
        const GenFunCase c{2, j, r1, r2};
        const Rational expect = vacuum_cgc_norm_sq(j, r1, r2).unitarity /
                                (mu_factorial(j, r2.mu) * mu_factorial(2, coupled_mu(j, r1, r2)));
        CHECK(genfun_rhs(c, 0.0) == doctest::Approx(std::sqrt(to_double(expect))).epsilon(1e-14));
    }
    const GenFunCase c{2, 2, r1, r2};
    CHECK(std::abs(genfun_rhs(c, 1.0 / 3) - genfun_lhs(c, 1.0 / 3)) <= 1e-10);
}

TEST_CASE("left-hand side examples") {
    const RepLabel h{Rational(1, 2), 1};
    CHECK(genfun_lhs_coeffs({0, 0, h, h}) == DensePoly<double>::constant(1.0));
    const auto p = genfun_lhs_coeffs({0, 1, h, h});
    REQUIRE(p.degree() == 1);
    CHECK(std::abs(p.c[0]) == doctest::Approx(0.5));
    CHECK(std::abs(p.c[1]) == doctest::Approx(0.5));
    const RepLabel r2{Rational(3, 4), 1};
    for (long n12 = 0; n12 <= 4; ++n12)
        for (long j = 0; j <= 4; ++j) CHECK(genfun_lhs_coeffs({n12, j, h, r2}).degree() == n12 + j);
}

TEST_CASE("generating function identity on the full sweep") {
    double worst = 0;
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4)
            for (int e1 : {1, -1})
                for (int e2 : {1, -1}) {
                    const RepLabel r1{m1, e1}, r2{m2, e2};
                    const auto table = oracle_cgc(r1, r2, 10);
                    for (long E = 0; E <= 10; ++E)
                        for (long j = 0; j <= E; ++j) {
                            const GenFunCase c{E - j, j, r1, r2};
                            const auto m = verify_genfun(c, table);
                            REQUIRE(m.residual <= 1e-10);
                            REQUIRE(std::abs(std::abs(m.absorbed_constant) - genfun_expected_constant(c)) <= 1e-12);
                            worst = std::max(worst, m.residual);
                        }
                }
    MESSAGE("worst generating-function residual " << worst);
}

TEST_CASE("closed-form source gives the same identity") {
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4)
            for (long E = 0; E <= 8; ++E)
                for (long j = 0; j <= E; ++j) {
                    const GenFunCase c{E - j, j, RepLabel{m1, 1}, RepLabel{m2, 1}};
                    REQUIRE(verify_genfun(c, CgcSource::Closed).residual <= 1e-10);
                }
    const RepLabel h{Rational(1, 2), 1}, m{Rational(1, 2), -1};
    CHECK_THROWS_AS(genfun_lhs_coeffs({1, 1, h, m}, CgcSource::Closed), DomainError);
}

TEST_CASE("sensitivity: a perturbed mu2 on one side is detected") {
    const RepLabel r1{Rational(1, 2), 1}, r2{Rational(1, 4), 1}, r2p{Rational(1, 4) + Rational(1, 1000), 1};
    for (long n12 : {2L, 3L})
        for (long j : {2L, 3L}) {
            const GenFunCase c{n12, j, r1, r2}, cp{n12, j, r1, r2p};
            CHECK(compare_matched(genfun_lhs_coeffs(c), genfun_rhs_coeffs(cp)).residual > 1e-5);
        }
}

TEST_CASE("odd-n12 absorbed constant") {
    const RepLabel r1{Rational(1, 2), 1}, r2{Rational(1, 4), 1};
    CHECK(genfun_expected_constant({2, 1, r1, r2}) == 1.0);
    CHECK(genfun_expected_constant({1, 1, r1, r2}) == doctest::Approx(1.0));
    CHECK(genfun_expected_constant({3, 1, r1, r2}) < 1.0);
}

TEST_CASE("su(1,1) generating function") {
    CHECK(su11_genfun_rhs(0, 0, Rational(1), Rational(1), 0.4) == doctest::Approx(1.0));
    CHECK(su11_verify(1, 0, Rational(1, 2), Rational(1, 2)) <= 1e-12);
    const std::vector<Rational> ls{Rational(1, 2), Rational(1), Rational(3, 2)};
    for (const auto &l1 : ls)
        for (const auto &l2 : ls) {
            const auto t = su11_oracle_cgc(l1, l2, 16);
            for (long k = 0; k <= 8; ++k)
                for (long m12 = 0; m12 <= 8; ++m12) REQUIRE(su11_verify(k, m12, t) <= 1e-10);
        }
}
