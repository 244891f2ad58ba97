#pragma once

#include <array>
#include <cstddef>

#include "layerbeta/errors.hpp"

namespace layerbeta {

// Dense truncated Taylor series in two variables, total degree <= 4.
// Coefficient of x^i y^j sits at index tri(i+j) + j, tri(d) = d(d+1)/2:
// [1, x, y, x^2, xy, y^2, x^3, ..., y^4], 15 slots in all.
struct Jet2 {
    static constexpr std::size_t max_degree = 4;
    static constexpr std::size_t size = 15;
    std::array<double, size> c{};

    static constexpr std::size_t idx(std::size_t i, std::size_t j) {
        std::size_t d = i + j;
        return d * (d + 1) / 2 + j;
    }

    double coeff(std::size_t i, std::size_t j) const { return c[idx(i, j)]; }
    double& coeff(std::size_t i, std::size_t j) { return c[idx(i, j)]; }

    static Jet2 constant(double v) {
        Jet2 j;
        j.c[0] = v;
        return j;
    }
    static Jet2 variable_x() {
        Jet2 j;
        j.c[idx(1, 0)] = 1.0;
        return j;
    }
    static Jet2 variable_y() {
        Jet2 j;
        j.c[idx(0, 1)] = 1.0;
        return j;
    }

    double eval(double x, double y) const {
        double s = 0;
        for (std::size_t d = 0; d <= max_degree; ++d)
            for (std::size_t j = 0; j <= d; ++j) {
                double m = c[idx(d - j, j)];
                if (m == 0.0) continue;
                for (std::size_t k = 0; k < d - j; ++k) m *= x;
                for (std::size_t k = 0; k < j; ++k) m *= y;
                s += m;
            }
        return s;
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (std::size_t k = 0; k < Jet2::size; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (std::size_t k = 0; k < Jet2::size; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    for (double& x : r.c) x *= s;
    return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (std::size_t da = 0; da <= Jet2::max_degree; ++da)
        for (std::size_t ja = 0; ja <= da; ++ja) {
            double ca = a.c[Jet2::idx(da - ja, ja)];
            if (ca == 0.0) continue;
            for (std::size_t db = 0; da + db <= Jet2::max_degree; ++db)
                for (std::size_t jb = 0; jb <= db; ++jb) {
                    double cb = b.c[Jet2::idx(db - jb, jb)];
                    if (cb == 0.0) continue;
                    r.coeff(da - ja + db - jb, ja + jb) += ca * cb;
                }
        }
    return r;
}

// f(p(x,y), q(x,y)) for inner jets with zero constant term.
inline Jet2 compose(const Jet2& f, const Jet2& p, const Jet2& q) {
    if (p.c[0] != 0.0 || q.c[0] != 0.0)
        throw DomainError("compose: inner jets must have zero constant term");
    std::array<Jet2, Jet2::max_degree + 1> pp, qp;
    pp[0] = Jet2::constant(1.0);
    qp[0] = Jet2::constant(1.0);
    for (std::size_t k = 1; k <= Jet2::max_degree; ++k) {
        pp[k] = pp[k - 1] * p;
        qp[k] = qp[k - 1] * q;
    }
    Jet2 r;
    for (std::size_t d = 0; d <= Jet2::max_degree; ++d)
        for (std::size_t j = 0; j <= d; ++j) {
            double cf = f.c[Jet2::idx(d - j, j)];
            if (cf == 0.0) continue;
            r = r + cf * (pp[d - j] * qp[j]);
        }
    return r;
}

// Compositional inverse of the map (u,v) = (U(x,y), V(x,y)) with zero constant
// terms and invertible linear part L. Returns jets (X,Y) in the new variables
// with U(X,Y) = u, V(X,Y) = v to total degree 4. Splitting (U,V) = L + N with
// N of valuation >= 2, the fixed point (X,Y) = L^{-1}((u,v) - N(X,Y)) gains
// one degree per pass, so three passes after the linear seed suffice.
inline void revert2(const Jet2& U, const Jet2& V, Jet2& X, Jet2& Y) {
    if (U.c[0] != 0.0 || V.c[0] != 0.0)
        throw DomainError("revert2: map must fix the origin");
    double a = U.coeff(1, 0), b = U.coeff(0, 1);
    double c = V.coeff(1, 0), d = V.coeff(0, 1);
    double det = a * d - b * c;
    if (det == 0.0) throw DomainError("revert2: singular linear part");
    Jet2 Un = U, Vn = V;            // nonlinear tails
    Un.coeff(1, 0) = Un.coeff(0, 1) = 0.0;
    Vn.coeff(1, 0) = Vn.coeff(0, 1) = 0.0;
    auto apply_inverse = [&](const Jet2& s, const Jet2& t, Jet2& x, Jet2& y) {
        x = (1.0 / det) * (d * s - b * t);
        y = (1.0 / det) * (a * t - c * s);
    };
    Jet2 u = Jet2::variable_x(), v = Jet2::variable_y();
    apply_inverse(u, v, X, Y);
    for (int pass = 0; pass < 3; ++pass) {
        Jet2 rx = u - compose(Un, X, Y);
        Jet2 ry = v - compose(Vn, X, Y);
        apply_inverse(rx, ry, X, Y);
    }
}

} // namespace layerbeta
