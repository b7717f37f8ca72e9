#include "doctest.h"
#include "parabose/osp_rep.hpp"
#include "parabose/su11.hpp"

#include <cmath>
#include <random>

using namespace parabose;

namespace {

const std::vector<Rational> grid4{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(3, 2)};

double dot(const TensorState &a, const TensorState &b) {
    double s = 0;
    for (long i = 0; i <= a.level; ++i) s += a.coeffs[i] * b.coeffs[i];
    return s;
}

double max_diff(const TensorState &a, const TensorState &b) {
    double m = 0;
    for (long i = 0; i <= a.level; ++i) m = std::max(m, std::abs(a.coeffs[i] - b.coeffs[i]));
    return m;
}

template <class F> void for_each_rep_pair(F f) {
    for (const auto &m1 : grid4)
        for (const auto &m2 : grid4)
            for (int e1 : {1, -1})
                for (int e2 : {1, -1}) f(RepLabel{m1, e1}, RepLabel{m2, e2});
}

} // namespace

TEST_CASE("rep_apply examples") {
    const RepLabel r{Rational(1, 2), 1};
    CHECK(rep_apply(Generator::Jminus, 0, r).empty());
    auto j0 = rep_apply(Generator::J0, 2, RepLabel{Rational(3, 4), -1});
    REQUIRE(j0.size() == 1);
    CHECK(j0[0].coeff == doctest::Approx(2 + 0.75 + 0.5));
    CHECK(j0[0].n == 2);
    auto jp = rep_apply(Generator::Jplus, 0, r);
    CHECK(jp[0].coeff == doctest::Approx(std::sqrt(2.0)));
    CHECK(jp[0].n == 1);
    auto c = rep_apply(Generator::C, 5, RepLabel{Rational(3, 4), -1});
    CHECK(c[0].coeff == doctest::Approx(0.75));
    CHECK(rep_apply(Generator::R, 3, RepLabel{Rational(1, 4), -1})[0].coeff == 1.0);
    CHECK_THROWS(parse_generator("K"));
    CHECK(parse_generator("J+") == Generator::Jplus);
}

TEST_CASE("Casimir value on a single representation") {
    // (J+ J- - J0 + 1/2) R = -eps mu on every basis vector.
    for (const auto &mu : grid4)
        for (int eps : {1, -1})
            for (long n = 0; n <= 10; ++n) {
                const RepLabel r{mu, eps};
                double jpjm = n == 0 ? 0.0 : rep_apply(Generator::Jminus, n, r)[0].coeff *
                                                 rep_apply(Generator::Jplus, n - 1, r)[0].coeff;
                double v = (jpjm - rep_apply(Generator::J0, n, r)[0].coeff + 0.5) *
                           rep_apply(Generator::R, n, r)[0].coeff;
                CHECK(v == doctest::Approx(rep_apply(Generator::C, n, r)[0].coeff).epsilon(1e-13));
            }
}

TEST_CASE("coproduct examples") {
    const RepLabel r1{Rational(1, 4), 1}, r2{Rational(3, 2), -1};
    TensorState vac{0, {1.0}};
    CHECK(coproduct_apply(Generator::Jminus, vac, r1, r2).norm() == 0.0);
    for (long E = 0; E <= 5; ++E)
        for (long n1 = 0; n1 <= E; ++n1) {
            TensorState e = TensorState::zero(E);
            e.coeffs[n1] = 1.0;
            CHECK(coproduct_apply(Generator::J0, e, r1, r2).coeffs[n1] ==
                  doctest::Approx(E + 0.25 + 1.5 + 1));
            CHECK(coproduct_apply(Generator::R, e, r1, r2).coeffs[n1] == (E % 2 ? 1.0 : -1.0));
        }
}

TEST_CASE("defining relations hold on random states") {
    std::mt19937 rng(7);
    std::normal_distribution<double> g;
    for_each_rep_pair([&](const RepLabel &r1, const RepLabel &r2) {
        for (long E = 0; E <= 10; ++E) {
            TensorState s = TensorState::zero(E);
            for (double &v : s.coeffs) v = g(rng);
            TensorState a = coproduct_apply(Generator::Jminus, coproduct_apply(Generator::Jplus, s, r1, r2), r1, r2);
            if (E > 0) {
                TensorState b = coproduct_apply(Generator::Jplus, coproduct_apply(Generator::Jminus, s, r1, r2), r1, r2);
                for (long i = 0; i <= E; ++i) a.coeffs[i] += b.coeffs[i];
            }
            TensorState h = coproduct_apply(Generator::J0, s, r1, r2);
            for (long i = 0; i <= E; ++i) a.coeffs[i] -= 2 * h.coeffs[i];
            REQUIRE(a.norm() <= 1e-11 * (1 + s.norm() * E));
            TensorState rr = coproduct_apply(Generator::R, coproduct_apply(Generator::R, s, r1, r2), r1, r2);
            REQUIRE(max_diff(rr, s) <= 1e-11);
        }
    });
}

TEST_CASE("lowest weight vectors") {
    const RepLabel h{Rational(1, 2), 1};
    auto v0 = lowest_weight(0, h, h);
    CHECK(v0.coeffs == std::vector<double>{1.0});
    auto v1 = lowest_weight(1, h, h);
    CHECK(std::abs(v1.coeffs[0]) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(v1.coeffs[1]) == doctest::Approx(1 / std::sqrt(2.0)));
    for_each_rep_pair([&](const RepLabel &r1, const RepLabel &r2) {
        for (long j = 0; j <= 12; ++j) {
            auto v = lowest_weight(j, r1, r2);
            REQUIRE(v.coeffs[0] > 0);
            REQUIRE(std::abs(v.norm() - 1) <= 1e-14);
            if (j > 0) REQUIRE(coproduct_apply(Generator::Jminus, v, r1, r2).norm() <= 1e-12);
            auto c = coproduct_apply(Generator::C, v, r1, r2);
            double expect = -coupled_eps(j, r1, r2) * to_double(coupled_mu(j, r1, r2));
            REQUIRE(std::abs(dot(v, c) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
            REQUIRE(max_diff(v, lowest_weight_nullspace(j, r1, r2)) <= 1e-10);
        }
    });
}

TEST_CASE("oracle tables: unitarity and representation invariants") {
    const RepLabel h{Rational(1, 2), 1};
    auto small = oracle_cgc(h, h, 1);
    CHECK(small.M[0](0, 0) == 1.0);
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c) CHECK(std::abs(small.M[1](r, c)) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(small.coeff(1, 1, 0, 1) == 0.0);
    CHECK(small.phase_convention.find("positive") != std::string::npos);

    for_each_rep_pair([&](const RepLabel &r1, const RepLabel &r2) {
        auto t = oracle_cgc(r1, r2, 12);
        REQUIRE(unitarity_defect(t) <= 1e-10);
        for (long E = 0; E <= 11; ++E)
            for (long j = 0; j <= E; ++j) {
                const long n12 = E - j;
                auto row = t.row(n12, j);
                REQUIRE(row.coeffs[0] > 0);
                const int eps12 = coupled_eps(j, r1, r2);
                const Rational mu12 = coupled_mu(j, r1, r2);
                auto rr = coproduct_apply(Generator::R, row, r1, r2);
                for (long i = 0; i <= E; ++i)
                    REQUIRE(std::abs(rr.coeffs[i] - eps12 * (n12 % 2 ? -1 : 1) * row.coeffs[i]) <= 1e-12);
                auto c = coproduct_apply(Generator::C, row, r1, r2);
                for (long i = 0; i <= E; ++i)
                    REQUIRE(std::abs(c.coeffs[i] + eps12 * to_double(mu12) * row.coeffs[i]) <= 1e-10);
                auto round = coproduct_apply(Generator::Jminus, coproduct_apply(Generator::Jplus, row, r1, r2), r1, r2);
                const double lam = to_double(mu_number(n12 + 1, mu12));
                for (long i = 0; i <= E; ++i)
                    REQUIRE(std::abs(round.coeffs[i] - lam * row.coeffs[i]) <= 1e-11 * std::max(1.0, lam));
            }
    });
}

TEST_CASE("su(1,1) oracle") {
    const std::vector<Rational> ls{Rational(1, 2), Rational(1), Rational(3, 2)};
    CHECK(su11_vacuum_norm(0, Rational(3, 2), Rational(1)) == 1);
    CHECK(su11_vacuum_norm(1, Rational(1, 2), Rational(1, 2)) == Rational(1, 2));
    for (const auto &l1 : ls)
        for (const auto &l2 : ls) {
            auto t = su11_oracle_cgc(l1, l2, 10);
            for (const auto &m : t.M) {
                Eigen::MatrixXd d = m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols());
                REQUIRE(d.cwiseAbs().maxCoeff() <= 1e-10);
            }
            for (long k = 0; k <= 6; ++k) {
                const Rational anchor = su11_vacuum_norm_unitarity(k, l1, l2);
                for (long m1 = 0; m1 <= k; ++m1) {
                    const double c = t.coeff(m1, k - m1, 0, k);
                    REQUIRE((c > 0) == (m1 % 2 == 0));
                    REQUIRE(std::abs(c * c - to_double(su11_vacuum_ratio_sq(m1, k, l1, l2) * anchor)) <= 1e-12);
                }
                // Chu-Vandermonde closed form of the unitarity anchor.
                REQUIRE(anchor == pochhammer(2 * l1, k) / pochhammer(2 * l1 + 2 * l2 + k - 1, k));
            }
        }
}

TEST_CASE("su(1,1) closed vacuum norm differs from unitarity away from k <= 1") {
    // At l1 = l2 = 1, k = 1 the closed expression gives 1/6 while the
    // two-dimensional lowest-weight row has |<0,1|0>|^2 = 1/2.
    CHECK(su11_vacuum_norm(1, Rational(1), Rational(1)) == Rational(1, 6));
    CHECK(su11_vacuum_norm_unitarity(1, Rational(1), Rational(1)) == Rational(1, 2));
    CHECK(su11_vacuum_norm(2, Rational(1, 2), Rational(1, 2)) == Rational(1, 12));
    CHECK(su11_vacuum_norm_unitarity(2, Rational(1, 2), Rational(1, 2)) == Rational(1, 6));
}
