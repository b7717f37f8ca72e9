#pragma once

#include "parabose/cgc_closed.hpp"
#include "parabose/poly.hpp"
#include "parabose/su11.hpp"

#include <string>

namespace parabose {

// 2F1(a, b; c; -s^2) as a polynomial in s (a or b a nonpositive integer).
DensePoly<Rational> f21_in_minus_square(const Rational &a, const Rational &b, const Rational &c);

// One coupled row (n12, j) of the tensor product (mu1, eps1) x (mu2, eps2).
struct GenFunCase {
    long n12 = 0;
    long j = 0;
    RepLabel r1, r2;

    bool n12_even() const { return n12 % 2 == 0; }
    void validate() const;
};

// 2F1(a, b; c; -s^2) as a polynomial in s; coefficient of s^{k+shift} scaled.
struct TwoF1Term {
    Rational a, b, c;
    Rational scale;   // multiplies the whole term
    long s_shift = 0; // extra power of s
};

// The two-2F1 bracket of a parity case in symbolic form.
struct HypergeomSumForm {
    std::vector<TwoF1Term> terms;
};

HypergeomSumForm hypergeom_sum_form(const GenFunCase &c);

// The bracket expanded as an exact polynomial in s of degree <= j+1.
DensePoly<Rational> hypergeom_sum(const GenFunCase &c);

// The finite sum over n that the bracket resums, term by term:
// n12 even: sum_n (-1/eps2)^n sigma(n,j) F(j,n)/[n]_mu1! s^n
// n12 odd:  sum_n (-1/eps2)^n sigma(n,j) F(j,n-1)/[n]_mu1! ([n]_mu1 + [1+j-n]_mu2) s^n
// with F(j,-1) = 1/[j+1]_mu2.
DensePoly<Rational> hypergeom_sum_direct(const GenFunCase &c);

// Right-hand side: (s^2+1)^{floor(n12/2)} times the bracket times the
// prefactor built from the unitarity-anchored vacuum coefficient.
DensePoly<double> genfun_rhs_coeffs(const GenFunCase &c);
double genfun_rhs(const GenFunCase &c, double s);

enum class CgcSource { Oracle, Closed };

// sum_n s^n <n, E-n | n12, j> / sqrt([n]_mu1! [E-n]_mu2!), E = n12 + j.
DensePoly<double> genfun_lhs_coeffs(const GenFunCase &c, const CgcTable &table);
// The closed source applies the fixed column sign of closed_column_sign and
// requires eps1 = eps2 = +1.
DensePoly<double> genfun_lhs_coeffs(const GenFunCase &c, CgcSource source = CgcSource::Oracle);
double genfun_lhs(const GenFunCase &c, double s, CgcSource source = CgcSource::Oracle);

struct MatchedComparison {
    double residual = 0;          // max |lhs_i - constant * rhs_i|
    double absorbed_constant = 1; // lhs / rhs at the lowest nonvanishing coefficient
    long match_index = -1;
};

// Matches the overall constant at the lowest coefficient where lhs is
// nonvanishing, then returns the max coefficient residual.
MatchedComparison compare_matched(const DensePoly<double> &lhs, const DensePoly<double> &rhs);

// The constant the odd-n12 prefactor leaves over: sqrt([n12-1]! [1] / [n12]!)
// in mu12. Equal to 1 for n12 even.
double genfun_expected_constant(const GenFunCase &c);

MatchedComparison verify_genfun(const GenFunCase &c, const CgcTable &table);
MatchedComparison verify_genfun(const GenFunCase &c, CgcSource source = CgcSource::Oracle);

// su(1,1): polynomial in z of
// 2F1(-k, 1-k-2l2; 2l1; z) (1-z)^m12 / sqrt(m12! (2l12)_m12) * anchor / sqrt(k! (2l2)_k)
// with anchor^2 the squared vacuum coefficient.
DensePoly<double> su11_genfun_rhs_coeffs(long k, long m12, const Rational &l1, const Rational &l2,
                                         const Rational &anchor_sq);
double su11_genfun_rhs(long k, long m12, const Rational &l1, const Rational &l2, double z);
// sum_m (-1)^m <m, m12+k-m | m12, l12> z^m / sqrt(m! (2l1)_m (m12+k-m)! (2l2)_{m12+k-m}).
DensePoly<double> su11_genfun_lhs_coeffs(long k, long m12, const Su11Table &table);
// Max coefficient residual using the unitarity anchor, no constant absorbed.
double su11_verify(long k, long m12, const Rational &l1, const Rational &l2);
double su11_verify(long k, long m12, const Su11Table &table);

} // namespace parabose
