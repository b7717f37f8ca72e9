#pragma once

#include "parabose/core_arith.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace parabose {

// Positive discrete series representation (mu, eps) of osp(1|2).
struct RepLabel {
    Rational mu;
    int eps = 1;
};

enum class Generator { J0, Jplus, Jminus, R, C };

Generator parse_generator(const std::string &name);
std::string generator_name(Generator g);

struct Term {
    double coeff;
    long n;
};

// Action of a generator on the basis vector |n, mu, eps>; at most one term.
std::vector<Term> rep_apply(Generator g, long n, const RepLabel &rep);

// Vector of (mu1,eps1) x (mu2,eps2) at fixed energy level E = n1 + n2;
// coeffs[n1] is the coefficient of |n1, E - n1>.
struct TensorState {
    long level = 0;
    std::vector<double> coeffs;

    static TensorState zero(long level) { return {level, std::vector<double>(level + 1, 0.0)}; }
    double norm() const;
    // Coefficient at (n1, n2); zero when n1 + n2 != level.
    double at(long n1, long n2) const;
};

// Twisted coproduct action: Delta(J+-) = J+- (x) R + 1 (x) J+-,
// Delta(J0) = J0 (x) 1 + 1 (x) J0, Delta(R) = R (x) R and
// Delta(C) = (Delta(J+) Delta(J-) - Delta(J0) + 1/2) Delta(R).
// Delta(J-) on level 0 yields the zero state at level 0.
TensorState coproduct_apply(Generator g, const TensorState &state, const RepLabel &r1,
                            const RepLabel &r2);

// mu12 = mu1 + mu2 + 1/2 + j and eps12 = (-1)^j eps1 eps2.
Rational coupled_mu(long j, const RepLabel &r1, const RepLabel &r2);
int coupled_eps(long j, const RepLabel &r1, const RepLabel &r2);

// Unit vector at level j annihilated by Delta(J-), built from the two-term
// recursion between neighbouring coefficients; the coefficient at n1 = 0 is
// positive.
TensorState lowest_weight(long j, const RepLabel &r1, const RepLabel &r2);

// The same vector obtained from a generic null-space solve of the matrix of
// Delta(J-) (debug cross-check). Throws if the kernel is not one-dimensional.
TensorState lowest_weight_nullspace(long j, const RepLabel &r1, const RepLabel &r2);

inline const char *kPhaseConvention =
    "coefficient at n1=0 real and positive in every coupled row; lowest weights fixed at (0,j) "
    "and raised with Delta(J+)/sqrt([n12]_mu12)";

// Clebsch-Gordan table. M[E] is (E+1)x(E+1); row j is the coupled vector
// |n12 = E - j, j>, column n1 the uncoupled vector |n1, E - n1>.
struct CgcTable {
    RepLabel r1, r2;
    long emax = 0;
    std::vector<Eigen::MatrixXd> M;
    std::string phase_convention = kPhaseConvention;

    // <n1, n2 | n12, j>; zero unless n1 + n2 == n12 + j.
    double coeff(long n1, long n2, long n12, long j) const;
    // Row (n12, j) as a TensorState.
    TensorState row(long n12, long j) const;
};

CgcTable oracle_cgc(const RepLabel &r1, const RepLabel &r2, long emax);

// max |M^T M - I| over all levels.
double unitarity_defect(const CgcTable &t);

} // namespace parabose
