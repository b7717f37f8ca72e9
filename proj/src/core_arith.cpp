#include "parabose/core_arith.hpp"

namespace parabose {

namespace {

void require_nonnegative(long n, const char *what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

} // namespace

Rational mu_number(long n, const Rational &mu) {
    require_nonnegative(n, "mu_number");
    return n % 2 == 0 ? Rational(n) : Rational(n) + 2 * mu;
}

Rational mu_factorial(long n, const Rational &mu) {
    require_nonnegative(n, "mu_factorial");
    Rational r = 1;
    for (long i = 1; i <= n; ++i) r *= mu_number(i, mu);
    return r;
}

Rational mu_falling(long j, long n, const Rational &mu) {
    require_nonnegative(j, "mu_falling");
    require_nonnegative(n, "mu_falling");
    if (n > j + 1) throw std::invalid_argument("mu_falling: n exceeds j+1");
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= mu_number(j - i, mu);
    return r;
}

Rational pochhammer(const Rational &a, long n) {
    require_nonnegative(n, "pochhammer");
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= a + i;
    return r;
}

int parity_sign(long n, long j) {
    require_nonnegative(n, "parity_sign");
    require_nonnegative(j, "parity_sign");
    long e = n * j - n * (n + 1) / 2;
    return (e % 2 == 0) ? 1 : -1;
}

long factorial(long n) {
    require_nonnegative(n, "factorial");
    long r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational mu_factorial_pochhammer(long n, const Rational &mu) {
    require_nonnegative(n, "mu_factorial_pochhammer");
    long k = n / 2;
    Rational two_n = Rational(Integer(1) << n);
    Rational half(1, 2);
    if (n % 2 == 0) return two_n * factorial(k) * pochhammer(half + mu, k);
    return two_n * factorial(k) * pochhammer(3 * half + mu, k) * (half + mu);
}

Rational mu_falling_pochhammer(long j, long n, const Rational &mu) {
    require_nonnegative(j, "mu_falling_pochhammer");
    require_nonnegative(n, "mu_falling_pochhammer");
    long k = n / 2;
    Rational two_n = Rational(Integer(1) << n);
    Rational half(1, 2);
    Rational hj(j, 2);
    bool n_even = n % 2 == 0, j_even = j % 2 == 0;
    if (n_even && j_even) return two_n * pochhammer(-hj, k) * pochhammer(half - hj - mu, k);
    if (!n_even && j_even)
        return two_n * pochhammer(1 - hj, k) * pochhammer(half - hj - mu, k) * hj;
    if (n_even && !j_even) return two_n * pochhammer(half - hj, k) * pochhammer(-hj - mu, k);
    return two_n * pochhammer(1 - hj - mu, k) * pochhammer(half - hj, k) * (hj + mu);
}

Rational mu_falling_pochhammer_as_printed(long j, long n, const Rational &mu) {
    if (n % 2 == 1 && j % 2 == 1) return mu_falling_pochhammer(j, n, mu) / (Rational(j, 2) + mu);
    return mu_falling_pochhammer(j, n, mu);
}

} // namespace parabose
