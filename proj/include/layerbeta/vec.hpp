#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace layerbeta {

// Minimal fixed-size vectors for R^2 / R^3 points, tangents and normals.
template <std::size_t D>
struct Vec {
    std::array<double, D> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }

    friend Vec operator+(Vec a, const Vec& b) {
        for (std::size_t i = 0; i < D; ++i) a.v[i] += b.v[i];
        return a;
    }
    friend Vec operator-(Vec a, const Vec& b) {
        for (std::size_t i = 0; i < D; ++i) a.v[i] -= b.v[i];
        return a;
    }
    friend Vec operator*(double c, Vec a) {
        for (std::size_t i = 0; i < D; ++i) a.v[i] *= c;
        return a;
    }
    friend Vec operator-(Vec a) { return -1.0 * a; }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <std::size_t D>
inline double dot(const Vec<D>& a, const Vec<D>& b) {
    double s = 0;
    for (std::size_t i = 0; i < D; ++i) s += a.v[i] * b.v[i];
    return s;
}

template <std::size_t D>
inline double norm(const Vec<D>& a) {
    return std::sqrt(dot(a, a));
}

template <std::size_t D>
inline Vec<D> normalized(const Vec<D>& a) {
    return (1.0 / norm(a)) * a;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {{a[1] * b[2] - a[2] * b[1],
             a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]}};
}

// 90 degree rotations in the plane.
inline Vec2 rot_ccw(const Vec2& a) { return {{-a[1], a[0]}}; }
inline Vec2 rot_cw(const Vec2& a) { return {{a[1], -a[0]}}; }

// Proper rotations of 3-space, stored densely.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
        return r;
    }

    // Rodrigues rotation about a unit axis.
    static Mat3 rotation(const Vec3& axis, double angle) {
        Vec3 n = normalized(axis);
        double c = std::cos(angle), s = std::sin(angle), k = 1.0 - c;
        Mat3 r;
        r.m = {{{c + n[0] * n[0] * k, n[0] * n[1] * k - n[2] * s,
                 n[0] * n[2] * k + n[1] * s},
                {n[1] * n[0] * k + n[2] * s, c + n[1] * n[1] * k,
                 n[1] * n[2] * k - n[0] * s},
                {n[2] * n[0] * k - n[1] * s, n[2] * n[1] * k + n[0] * s,
                 c + n[2] * n[2] * k}}};
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m[i][j] != (i == j ? 1.0 : 0.0)) return false;
        return true;
    }

    friend Vec3 operator*(const Mat3& a, const Vec3& v) {
        Vec3 r;
        for (int i = 0; i < 3; ++i)
            r[i] = a.m[i][0] * v[0] + a.m[i][1] * v[1] + a.m[i][2] * v[2];
        return r;
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
        return r;
    }
};

} // namespace layerbeta
