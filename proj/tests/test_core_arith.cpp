#include "doctest.h"
#include "parabose/core_arith.hpp"

#include <vector>

using namespace parabose;

namespace {

const std::vector<Rational> mu_grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                    Rational(3, 2)};

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("mu_number") {
    CHECK(mu_number(0, Rational(5, 7)) == 0);
    CHECK(mu_number(1, Rational(1, 2)) == 2);
    CHECK(mu_number(4, Rational(3, 4)) == 4);
    CHECK(mu_number(3, Rational(1, 4)) == Rational(7, 2));
    CHECK(mu_number(5, Rational(0)) == 5);
    CHECK_THROWS(mu_number(-1, Rational(1)));
}

TEST_CASE("mu_factorial") {
    CHECK(mu_factorial(0, Rational(9)) == 1);
    CHECK(mu_factorial(3, Rational(1, 2)) == 16);
    CHECK(mu_factorial(4, Rational(1, 4)) == 42);
    // mu = 0 recovers the ordinary factorial.
    CHECK(mu_factorial(7, Rational(0)) == 5040);
}

TEST_CASE("mu_falling") {
    CHECK(mu_falling(6, 0, Rational(1, 3)) == 1);
    CHECK(mu_falling(3, 2, Rational(1, 2)) == 8);
    CHECK(mu_falling(5, 5, Rational(1, 4)) == mu_factorial(5, Rational(1, 4)));
    CHECK(mu_falling(4, 5, Rational(1, 4)) == 0);
    CHECK_THROWS(mu_falling(4, 6, Rational(1, 4)));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(7, 3), 0) == 1);
    CHECK(pochhammer(Rational(3), 2) == 12);
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(-2), 3) == 0);
}

TEST_CASE("parity_sign examples") {
    CHECK(parity_sign(0, 7) == 1);
    CHECK(parity_sign(2, 0) == -1);
    CHECK(parity_sign(1, 1) == 1);
}

TEST_CASE("parity_sign matches the brute-force exponent and its split form") {
    for (long n = 0; n <= 50; ++n)
        for (long j = 0; j <= 50; ++j) {
            long e = n * j - n * (n + 1) / 2;
            int brute = 1;
            for (long i = 0; i < (e < 0 ? -e : e); ++i) brute = -brute;
            REQUIRE(parity_sign(n, j) == brute);
            long k = n / 2;
            int split = (n % 2 == 0) ? ((k % 2) ? -1 : 1) : (((j + k + 1) % 2) ? -1 : 1);
            REQUIRE(parity_sign(n, j) == split);
        }
}

TEST_CASE("mu_factorial equals its Pochhammer form") {
    for (const auto &mu : mu_grid)
        for (long n = 0; n <= 24; ++n) REQUIRE(mu_factorial(n, mu) == mu_factorial_pochhammer(n, mu));
}

TEST_CASE("falling product times the remaining factorial is the full factorial") {
    for (const auto &mu : mu_grid)
        for (long j = 0; j <= 12; ++j)
            for (long n = 0; n <= j; ++n)
                REQUIRE(mu_falling(j, n, mu) * mu_factorial(j - n, mu) == mu_factorial(j, mu));
}

TEST_CASE("falling product equals its four parity-split Pochhammer forms") {
    for (const auto &mu : mu_grid)
        for (long j = 0; j <= 12; ++j)
            for (long n = 0; n <= j; ++n) {
                INFO("j=" << j << " n=" << n << " mu=" << to_string(mu));
                REQUIRE(mu_falling(j, n, mu) == mu_falling_pochhammer(j, n, mu));
            }
}

TEST_CASE("printed odd-odd falling-product branch is short by (j/2 + mu)") {
    for (const auto &mu : mu_grid)
        for (long j = 1; j <= 11; j += 2)
            for (long n = 1; n <= j; n += 2) {
                Rational printed = mu_falling_pochhammer_as_printed(j, n, mu);
                REQUIRE(printed * (Rational(j, 2) + mu) == mu_falling(j, n, mu));
                if (Rational(j, 2) + mu != 1) REQUIRE(printed != mu_falling(j, n, mu));
            }
}
