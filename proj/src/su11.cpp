#include "parabose/su11.hpp"

#include <cmath>
#include <stdexcept>

namespace parabose {

namespace {

// sqrt(m (2l + m - 1)), the matrix element of A- on |m> (and of A+ on |m-1>).
double ladder(long m, const Rational &l) {
    return std::sqrt(to_double(Rational(m) * (2 * l + m - 1)));
}

Rational binomial(long n, long k) { return Rational(factorial(n)) / (factorial(k) * factorial(n - k)); }

} // namespace

double Su11Table::coeff(long m1, long m2, long m12, long k) const {
    if (m1 < 0 || m2 < 0 || m12 < 0 || k < 0) return 0.0;
    const long E = m1 + m2;
    if (E != m12 + k) return 0.0;
    if (E > emax) throw std::out_of_range("Su11Table::coeff: level beyond table");
    return M[E](k, m1);
}

Su11Table su11_oracle_cgc(const Rational &l1, const Rational &l2, long emax) {
    if (l1 <= 0 || l2 <= 0) throw DomainError("su11_oracle_cgc: l1, l2 must be positive");
    Su11Table t;
    t.l1 = l1;
    t.l2 = l2;
    t.emax = emax;
    for (long E = 0; E <= emax; ++E) t.M.push_back(Eigen::MatrixXd::Zero(E + 1, E + 1));
    for (long k = 0; k <= emax; ++k) {
        const Rational l12 = l1 + l2 + k;
        // Delta(A-) v = 0: sqrt(m1 (2l1+m1-1)) c_{m1} + sqrt((m2+1)(2l2+m2)) c_{m1-1} = 0
        std::vector<double> c(k + 1, 0.0);
        c[0] = 1.0;
        for (long m1 = 0; m1 < k; ++m1) c[m1 + 1] = -ladder(k - m1, l2) / ladder(m1 + 1, l1) * c[m1];
        double nrm = 0;
        for (double v : c) nrm += v * v;
        nrm = std::sqrt(nrm);
        for (double &v : c) v /= nrm;
        for (long m12 = 0; k + m12 <= emax; ++m12) {
            if (m12 > 0) {
                std::vector<double> next(c.size() + 1, 0.0);
                const long L = static_cast<long>(c.size()) - 1;
                for (long m1 = 0; m1 <= L; ++m1) {
                    next[m1 + 1] += ladder(m1 + 1, l1) * c[m1];
                    next[m1] += ladder(L - m1 + 1, l2) * c[m1];
                }
                const double f = ladder(m12, l12);
                for (double &v : next) v /= f;
                c = std::move(next);
            }
            const long E = k + m12;
            for (long m1 = 0; m1 <= E; ++m1) t.M[E](k, m1) = c[m1];
        }
    }
    return t;
}

Rational su11_vacuum_norm(long k, const Rational &l1, const Rational &l2) {
    return pochhammer(2 * l1, k) / pochhammer(2 * l1 + 2 * l2 - 1, 2 * k);
}

Rational su11_vacuum_ratio_sq(long m1, long k, const Rational &l1, const Rational &l2) {
    return binomial(k, m1) * pochhammer(2 * l2, k) / (pochhammer(2 * l1, m1) * pochhammer(2 * l2, k - m1));
}

Rational su11_vacuum_norm_unitarity(long k, const Rational &l1, const Rational &l2) {
    Rational s = 0;
    for (long m1 = 0; m1 <= k; ++m1) s += su11_vacuum_ratio_sq(m1, k, l1, l2);
    return 1 / s;
}

} // namespace parabose
