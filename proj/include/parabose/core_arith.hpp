#pragma once

#include "parabose/rational.hpp"

namespace parabose {

// [n]_mu = n + mu (1 - (-1)^n).
Rational mu_number(long n, const Rational &mu);

// [n]_mu [n-1]_mu ... [1]_mu, with [0]_mu! = 1.
Rational mu_factorial(long n, const Rational &mu);

// [j]_mu [j-1]_mu ... [j-n+1]_mu for 0 <= n <= j+1. n = 0 gives 1.
Rational mu_falling(long j, long n, const Rational &mu);

// Rising factorial (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational &a, long n);

// (-1)^{n j - n(n+1)/2}, returned as +1 or -1.
int parity_sign(long n, long j);

long factorial(long n);

// Pochhammer forms of the mu-factorial and of the falling product, split on
// the parities of n and j. They agree with the direct products and exist so
// the identities can be checked exactly.
Rational mu_factorial_pochhammer(long n, const Rational &mu);
Rational mu_falling_pochhammer(long j, long n, const Rational &mu);

// The same four-branch form with the (n odd, j odd) branch exactly as it is
// usually printed, 2^n (1-j/2-mu)_k (1/2-j/2)_k. That branch lacks the factor
// (j/2 + mu) and is kept only so the discrepancy can be reported.
Rational mu_falling_pochhammer_as_printed(long j, long n, const Rational &mu);

} // namespace parabose
