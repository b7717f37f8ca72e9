#include "parabose/osp_rep.hpp"

#include <cmath>
#include <stdexcept>

namespace parabose {

namespace {

double sqrt_mu(long n, const Rational &mu) { return std::sqrt(to_double(mu_number(n, mu))); }

int sign_of_power(long n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace

Generator parse_generator(const std::string &name) {
    if (name == "J0") return Generator::J0;
    if (name == "J+") return Generator::Jplus;
    if (name == "J-") return Generator::Jminus;
    if (name == "R") return Generator::R;
    if (name == "C") return Generator::C;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string generator_name(Generator g) {
    switch (g) {
    case Generator::J0: return "J0";
    case Generator::Jplus: return "J+";
    case Generator::Jminus: return "J-";
    case Generator::R: return "R";
    case Generator::C: return "C";
    }
    return "?";
}

std::vector<Term> rep_apply(Generator g, long n, const RepLabel &rep) {
    if (n < 0) throw std::invalid_argument("rep_apply: negative index");
    switch (g) {
    case Generator::J0: return {{static_cast<double>(n) + to_double(rep.mu) + 0.5, n}};
    case Generator::Jplus: return {{sqrt_mu(n + 1, rep.mu), n + 1}};
    case Generator::Jminus:
        if (n == 0) return {};
        return {{sqrt_mu(n, rep.mu), n - 1}};
    case Generator::R: return {{static_cast<double>(rep.eps * sign_of_power(n)), n}};
    case Generator::C: return {{-rep.eps * to_double(rep.mu), n}};
    }
    throw std::invalid_argument("rep_apply: unknown generator");
}

double TensorState::norm() const {
    double s = 0;
    for (double v : coeffs) s += v * v;
    return std::sqrt(s);
}

double TensorState::at(long n1, long n2) const {
    if (n1 < 0 || n2 < 0 || n1 + n2 != level) return 0.0;
    return coeffs[n1];
}

TensorState coproduct_apply(Generator g, const TensorState &state, const RepLabel &r1,
                            const RepLabel &r2) {
    const long E = state.level;
    switch (g) {
    case Generator::J0: {
        TensorState out = state;
        const double e = static_cast<double>(E) + to_double(r1.mu) + to_double(r2.mu) + 1.0;
        for (double &v : out.coeffs) v *= e;
        return out;
    }
    case Generator::R: {
        TensorState out = state;
        const double e = r1.eps * r2.eps * sign_of_power(E);
        for (double &v : out.coeffs) v *= e;
        return out;
    }
    case Generator::Jplus: {
        TensorState out = TensorState::zero(E + 1);
        for (long n1 = 0; n1 <= E; ++n1) {
            const long n2 = E - n1;
            const double c = state.coeffs[n1];
            out.coeffs[n1 + 1] += r2.eps * sign_of_power(n2) * sqrt_mu(n1 + 1, r1.mu) * c;
            out.coeffs[n1] += sqrt_mu(n2 + 1, r2.mu) * c;
        }
        return out;
    }
    case Generator::Jminus: {
        if (E == 0) return TensorState::zero(0);
        TensorState out = TensorState::zero(E - 1);
        for (long n1 = 0; n1 <= E; ++n1) {
            const long n2 = E - n1;
            const double c = state.coeffs[n1];
            if (n1 > 0) out.coeffs[n1 - 1] += r2.eps * sign_of_power(n2) * sqrt_mu(n1, r1.mu) * c;
            if (n2 > 0) out.coeffs[n1] += sqrt_mu(n2, r2.mu) * c;
        }
        return out;
    }
    case Generator::C: {
        TensorState lowered = coproduct_apply(Generator::Jminus, state, r1, r2);
        TensorState t = (E == 0) ? TensorState::zero(0)
                                 : coproduct_apply(Generator::Jplus, lowered, r1, r2);
        TensorState h = coproduct_apply(Generator::J0, state, r1, r2);
        for (long i = 0; i <= E; ++i) t.coeffs[i] += -h.coeffs[i] + 0.5 * state.coeffs[i];
        return coproduct_apply(Generator::R, t, r1, r2);
    }
    }
    throw std::invalid_argument("coproduct_apply: unknown generator");
}

Rational coupled_mu(long j, const RepLabel &r1, const RepLabel &r2) {
    return r1.mu + r2.mu + Rational(1, 2) + j;
}

int coupled_eps(long j, const RepLabel &r1, const RepLabel &r2) {
    return sign_of_power(j) * r1.eps * r2.eps;
}

TensorState lowest_weight(long j, const RepLabel &r1, const RepLabel &r2) {
    if (j < 0) throw std::invalid_argument("lowest_weight: negative j");
    TensorState s = TensorState::zero(j);
    s.coeffs[0] = 1.0;
    for (long n = 0; n < j; ++n)
        s.coeffs[n + 1] = -r2.eps * sign_of_power(j - n - 1) *
                          std::sqrt(to_double(mu_number(j - n, r2.mu) / mu_number(n + 1, r1.mu))) *
                          s.coeffs[n];
    const double nrm = s.norm();
    for (double &v : s.coeffs) v /= nrm;
    return s;
}

TensorState lowest_weight_nullspace(long j, const RepLabel &r1, const RepLabel &r2) {
    if (j < 0) throw std::invalid_argument("lowest_weight_nullspace: negative j");
    if (j == 0) return {0, {1.0}};
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(j, j + 1);
    for (long n1 = 0; n1 <= j; ++n1) {
        TensorState e = TensorState::zero(j);
        e.coeffs[n1] = 1.0;
        TensorState img = coproduct_apply(Generator::Jminus, e, r1, r2);
        for (long i = 0; i < j; ++i) A(i, n1) = img.coeffs[i];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    Eigen::MatrixXd ker = lu.kernel();
    if (ker.cols() != 1) throw std::runtime_error("lowest_weight_nullspace: kernel is not one-dimensional");
    Eigen::VectorXd v = ker.col(0).normalized();
    if (v(0) < 0) v = -v;
    TensorState s = TensorState::zero(j);
    for (long i = 0; i <= j; ++i) s.coeffs[i] = v(i);
    return s;
}

double CgcTable::coeff(long n1, long n2, long n12, long j) const {
    if (n1 < 0 || n2 < 0 || n12 < 0 || j < 0) return 0.0;
    const long E = n1 + n2;
    if (E != n12 + j) return 0.0;
    if (E > emax) throw std::out_of_range("CgcTable::coeff: level beyond table");
    return M[E](j, n1);
}

TensorState CgcTable::row(long n12, long j) const {
    const long E = n12 + j;
    if (E > emax) throw std::out_of_range("CgcTable::row: level beyond table");
    TensorState s = TensorState::zero(E);
    for (long n1 = 0; n1 <= E; ++n1) s.coeffs[n1] = M[E](j, n1);
    return s;
}

CgcTable oracle_cgc(const RepLabel &r1, const RepLabel &r2, long emax) {
    if (emax < 0) throw std::invalid_argument("oracle_cgc: negative emax");
    CgcTable t;
    t.r1 = r1;
    t.r2 = r2;
    t.emax = emax;
    for (long E = 0; E <= emax; ++E) t.M.push_back(Eigen::MatrixXd::Zero(E + 1, E + 1));
    for (long j = 0; j <= emax; ++j) {
        const Rational mu12 = coupled_mu(j, r1, r2);
        TensorState s = lowest_weight(j, r1, r2);
        for (long n12 = 0; j + n12 <= emax; ++n12) {
            if (n12 > 0) {
                s = coproduct_apply(Generator::Jplus, s, r1, r2);
                const double f = std::sqrt(to_double(mu_number(n12, mu12)));
                for (double &v : s.coeffs) v /= f;
            }
            for (long n1 = 0; n1 <= s.level; ++n1) t.M[s.level](j, n1) = s.coeffs[n1];
        }
    }
    return t;
}

double unitarity_defect(const CgcTable &t) {
    double worst = 0;
    for (const auto &m : t.M) {
        Eigen::MatrixXd d = m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols());
        worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
    return worst;
}

} // namespace parabose
