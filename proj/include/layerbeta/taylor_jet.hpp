#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "layerbeta/errors.hpp"

namespace layerbeta {

// Dense truncated Taylor series in one variable: c[k] is the coefficient of
// x^k. All operations truncate to the shorter operand's order. Orders stay
// small (<= 9), so plain convolution loops are the right tool.
struct TaylorJet {
    std::vector<double> c;

    TaylorJet() = default;
    explicit TaylorJet(std::size_t order) : c(order + 1, 0.0) {}

    std::size_t order() const { return c.size() - 1; }
    double operator[](std::size_t k) const { return k < c.size() ? c[k] : 0.0; }
    double& at(std::size_t k) { return c[k]; }

    static TaylorJet constant(double v, std::size_t order) {
        TaylorJet j(order);
        j.c[0] = v;
        return j;
    }
    static TaylorJet identity(std::size_t order) {
        TaylorJet j(order);
        if (order >= 1) j.c[1] = 1.0;
        return j;
    }
};

inline TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline TaylorJet operator*(double s, const TaylorJet& a) {
    TaylorJet r = a;
    for (double& x : r.c) x *= s;
    return r;
}

inline TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k < r.c.size(); ++k) {
        double s = 0;
        for (std::size_t j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
        r.c[k] = s;
    }
    return r;
}

// d/dx, one order shorter.
inline TaylorJet derivative(const TaylorJet& a) {
    if (a.order() == 0) return TaylorJet(0);
    TaylorJet r(a.order() - 1);
    for (std::size_t k = 0; k + 1 < a.c.size(); ++k) r.c[k] = (k + 1) * a.c[k + 1];
    return r;
}

// f^alpha for f with f(0) > 0, real alpha, by the standard recurrence
//   k f0 g_k = sum_{j=1..k} (j(alpha+1) - k) f_j g_{k-j}.
inline TaylorJet pow_jet(const TaylorJet& f, double alpha) {
    if (f.c[0] <= 0.0)
        throw DomainError("pow_jet: leading coefficient must be positive");
    TaylorJet g(f.order());
    g.c[0] = std::pow(f.c[0], alpha);
    for (std::size_t k = 1; k <= f.order(); ++k) {
        double s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += (alpha * j + j - static_cast<double>(k)) * f.c[j] * g.c[k - j];
        g.c[k] = s / (static_cast<double>(k) * f.c[0]);
    }
    return g;
}

// f(g(x)) for g with g(0) = 0, by Horner's scheme on truncated series.
inline TaylorJet compose(const TaylorJet& f, const TaylorJet& g) {
    if (g.c[0] != 0.0)
        throw DomainError("compose: inner series must have zero constant term");
    std::size_t n = std::min(f.order(), g.order());
    TaylorJet r = TaylorJet::constant(f[f.order()], n);
    for (std::size_t k = f.order(); k-- > 0;) {
        TaylorJet gn = g;
        gn.c.resize(n + 1, 0.0);
        r = r * gn + TaylorJet::constant(f[k], n);
    }
    return r;
}

// Compositional inverse of u with u(0) = 0, u'(0) != 0: returns v with
// u(v(x)) = x + O(x^{n+1}). Fixed-point iteration v <- (x - (u - u1 x)(v))/u1
// gains one correct order per pass.
inline TaylorJet revert(const TaylorJet& u) {
    if (u.c[0] != 0.0 || u.c.size() < 2 || u.c[1] == 0.0)
        throw DomainError("revert: series must vanish at 0 with nonzero slope");
    std::size_t n = u.order();
    double u1 = u.c[1];
    TaylorJet tail = u;       // u - u1 x, valuation >= 2
    tail.c[1] = 0.0;
    TaylorJet v = (1.0 / u1) * TaylorJet::identity(n);
    for (std::size_t pass = 0; pass + 1 < n; ++pass) {
        TaylorJet corr = compose(tail, v);
        TaylorJet next = TaylorJet::identity(n) - corr;
        v = (1.0 / u1) * next;
    }
    return v;
}

} // namespace layerbeta
