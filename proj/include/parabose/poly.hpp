#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

namespace parabose {

// Dense univariate polynomial, c[i] is the coefficient of x^i. The zero
// polynomial is the empty sequence after trimming.
template <class T> struct DensePoly {
    std::vector<T> c;

    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static DensePoly constant(const T &v) { return DensePoly(std::vector<T>{v}); }
    static DensePoly monomial(std::size_t deg, const T &v = T(1)) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = v;
        return DensePoly(std::move(c));
    }

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    T coeff(std::size_t i) const { return i < c.size() ? c[i] : T(0); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }

    template <class U> U operator()(const U &x) const {
        U r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + U(*it);
        return r;
    }

    DensePoly &operator+=(const DensePoly &o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    DensePoly &operator-=(const DensePoly &o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    DensePoly &operator*=(const T &s) {
        for (auto &v : c) v *= s;
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly &b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly &b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const T &s) { return a *= s; }
    friend DensePoly operator*(const T &s, DensePoly a) { return a *= s; }
    friend DensePoly operator*(const DensePoly &a, const DensePoly &b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return DensePoly(std::move(r));
    }
    friend bool operator==(const DensePoly &a, const DensePoly &b) { return a.c == b.c; }

    // Multiplication by x^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c.begin(), c.end());
        return DensePoly(std::move(r));
    }

    DensePoly derivative() const {
        std::vector<T> r;
        for (std::size_t i = 1; i < c.size(); ++i) r.push_back(c[i] * T(static_cast<long>(i)));
        return DensePoly(std::move(r));
    }

    // p(x) -> p(-x).
    DensePoly reflected() const {
        DensePoly r = *this;
        for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }

    // p(x) -> p(a x + b).
    DensePoly composed_linear(const T &a, const T &b) const {
        DensePoly r;
        DensePoly lin(std::vector<T>{b, a});
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * lin + DensePoly::constant(*it);
        return r;
    }

    // p(x) -> p(x^2).
    DensePoly in_square() const {
        if (is_zero()) return {};
        std::vector<T> r(2 * c.size() - 1, T(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[2 * i] = c[i];
        return DensePoly(std::move(r));
    }

    template <class U> DensePoly<U> cast() const {
        std::vector<U> r;
        r.reserve(c.size());
        for (const auto &v : c) r.push_back(convert<U>(v));
        return DensePoly<U>(std::move(r));
    }

private:
    template <class U> static U convert(const T &v) {
        if constexpr (std::is_same_v<U, double> && !std::is_arithmetic_v<T>)
            return v.template convert_to<double>();
        else
            return U(v);
    }
};

// (1 + x^2)^k with integer coefficients.
template <class T> DensePoly<T> one_plus_square_power(long k) {
    DensePoly<T> r = DensePoly<T>::constant(T(1));
    DensePoly<T> f(std::vector<T>{T(1), T(0), T(1)});
    for (long i = 0; i < k; ++i) r = r * f;
    return r;
}

// Dense bivariate polynomial, coefficient of x^i y^j at (i, j).
template <class T> struct BiPoly {
    std::vector<std::vector<T>> c; // c[i][j]

    BiPoly() = default;
    BiPoly(std::size_t nx, std::size_t ny) : c(nx, std::vector<T>(ny, T(0))) {}

    std::size_t nx() const { return c.size(); }
    std::size_t ny() const { return c.empty() ? 0 : c[0].size(); }

    T at(std::size_t i, std::size_t j) const {
        return (i < nx() && j < ny()) ? c[i][j] : T(0);
    }
    T &ref(std::size_t i, std::size_t j) {
        grow(i + 1, j + 1);
        return c[i][j];
    }

    void grow(std::size_t mx, std::size_t my) {
        std::size_t ny_new = std::max(ny(), my);
        if (mx > nx()) c.resize(mx, std::vector<T>(ny_new, T(0)));
        for (auto &row : c)
            if (row.size() < ny_new) row.resize(ny_new, T(0));
    }

    // Total degree, -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (std::size_t i = 0; i < nx(); ++i)
            for (std::size_t j = 0; j < ny(); ++j)
                if (c[i][j] != T(0)) d = std::max<long>(d, static_cast<long>(i + j));
        return d;
    }

    BiPoly &operator+=(const BiPoly &o) {
        grow(o.nx(), o.ny());
        for (std::size_t i = 0; i < o.nx(); ++i)
            for (std::size_t j = 0; j < o.ny(); ++j) c[i][j] += o.c[i][j];
        return *this;
    }
    BiPoly &operator-=(const BiPoly &o) {
        grow(o.nx(), o.ny());
        for (std::size_t i = 0; i < o.nx(); ++i)
            for (std::size_t j = 0; j < o.ny(); ++j) c[i][j] -= o.c[i][j];
        return *this;
    }
    BiPoly &operator*=(const T &s) {
        for (auto &row : c)
            for (auto &v : row) v *= s;
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const T &s) { return a *= s; }
    friend BiPoly operator*(const T &s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly &a, const BiPoly &b) {
        if (a.nx() == 0 || b.nx() == 0) return {};
        BiPoly r(a.nx() + b.nx() - 1, a.ny() + b.ny() - 1);
        for (std::size_t i = 0; i < a.nx(); ++i)
            for (std::size_t j = 0; j < a.ny(); ++j) {
                if (a.c[i][j] == T(0)) continue;
                for (std::size_t k = 0; k < b.nx(); ++k)
                    for (std::size_t l = 0; l < b.ny(); ++l) r.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
            }
        return r;
    }

    // Outer product p(x) q(y).
    static BiPoly outer(const DensePoly<T> &p, const DensePoly<T> &q) {
        BiPoly r(p.c.size(), q.c.size());
        for (std::size_t i = 0; i < p.c.size(); ++i)
            for (std::size_t j = 0; j < q.c.size(); ++j) r.c[i][j] = p.c[i] * q.c[j];
        return r;
    }
    static BiPoly monomial(std::size_t i, std::size_t j, const T &v = T(1)) {
        BiPoly r(i + 1, j + 1);
        r.c[i][j] = v;
        return r;
    }

    BiPoly transposed() const {
        BiPoly r(ny(), nx());
        for (std::size_t i = 0; i < nx(); ++i)
            for (std::size_t j = 0; j < ny(); ++j) r.c[j][i] = c[i][j];
        return r;
    }

    template <class U> BiPoly<U> cast() const {
        BiPoly<U> r(nx(), ny());
        for (std::size_t i = 0; i < nx(); ++i)
            for (std::size_t j = 0; j < ny(); ++j) {
                if constexpr (std::is_same_v<U, double> && !std::is_arithmetic_v<T>)
                    r.c[i][j] = c[i][j].template convert_to<double>();
                else
                    r.c[i][j] = U(c[i][j]);
            }
        return r;
    }
};

// Largest absolute coefficient.
template <class T> double max_abs(const BiPoly<T> &p) {
    double m = 0;
    for (const auto &row : p.c)
        for (const auto &v : row) m = std::max(m, std::abs(static_cast<double>(v)));
    return m;
}

} // namespace parabose
