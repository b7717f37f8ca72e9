#pragma once

#include "parabose/core_arith.hpp"

#include <Eigen/Dense>

#include <vector>

namespace parabose {

// su(1,1) positive discrete series l > 0 with A+ |m> = sqrt((m+1)(2l+m)) |m+1>
// and the untwisted coproduct Delta(X) = X (x) 1 + 1 (x) X.
// M[E] has rows k (coupled |m12 = E - k, l12 = l1 + l2 + k>) and columns m1.
struct Su11Table {
    Rational l1, l2;
    long emax = 0;
    std::vector<Eigen::MatrixXd> M;

    double coeff(long m1, long m2, long m12, long k) const;
};

// Lowest weights fixed with a positive coefficient at (0, k).
Su11Table su11_oracle_cgc(const Rational &l1, const Rational &l2, long emax);

// |<0,l1,k,l2|0,l12>|^2 from the closed expression
// (2l1+k-1)! (2l1+2l2-2)! / ((2l1-1)! (2l12-2)!), written with Pochhammer
// symbols as (2l1)_k / (2l1+2l2-1)_{2k} so it is defined for rational l.
Rational su11_vacuum_norm(long k, const Rational &l1, const Rational &l2);

// The same quantity fixed by unitarity of the lowest-weight row, exactly.
Rational su11_vacuum_norm_unitarity(long k, const Rational &l1, const Rational &l2);

// Squared ratio |<m1, k-m1 | 0> / <0, k | 0>|^2 = C(k,m1) (2l2)_k / ((2l1)_m1 (2l2)_{k-m1}).
Rational su11_vacuum_ratio_sq(long m1, long k, const Rational &l1, const Rational &l2);

} // namespace parabose
