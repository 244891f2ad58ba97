#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "layerbeta/errors.hpp"
#include "layerbeta/taylor_jet.hpp"
#include "layerbeta/vec.hpp"

namespace layerbeta {

// Closed plane curve given by a finite Fourier series,
//   x(t) = sum_k p_k cos(kt) + q_k sin(kt),
//   y(t) = sum_k r_k cos(kt) + w_k sin(kt),    t in [0, 2pi).
// Finite series make derivatives of any order exact trigonometric sums, which
// is what lets the high-order graph coefficients be computed without any
// numerical differentiation.
class PlaneCurve {
  public:
    static constexpr int max_derivative_order = 9;

    struct Mode {
        int k = 0;
        double p = 0, q = 0, r = 0, w = 0;
    };

    explicit PlaneCurve(std::vector<Mode> modes) : modes_(std::move(modes)) {
        validate_regular();
    }

    static PlaneCurve circle(double radius) {
        if (radius <= 0.0) throw DomainError("circle: radius must be positive");
        return PlaneCurve({{0, 0, 0, 0, 0}, {1, radius, 0, 0, radius}});
    }

    // (a cos t, b sin t), counterclockwise.
    static PlaneCurve ellipse(double a, double b) {
        if (a <= 0.0 || b <= 0.0)
            throw DomainError("ellipse: semi-axes must be positive");
        return PlaneCurve({{0, 0, 0, 0, 0}, {1, a, 0, 0, b}});
    }

    // Plain-text file, one "k p q r w" line per mode; '#' starts a comment.
    static PlaneCurve from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open curve file: " + path);
        std::vector<Mode> modes;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream fields(line);
            Mode m;
            if (fields >> m.k) {
                if (m.k < 0 || !(fields >> m.p >> m.q >> m.r >> m.w))
                    throw DomainError("curve file " + path + ": malformed line " +
                                      std::to_string(line_no));
                modes.push_back(m);
            }
        }
        if (modes.empty())
            throw DomainError("curve file " + path + ": no modes found");
        return PlaneCurve(std::move(modes));
    }

    const std::vector<Mode>& modes() const { return modes_; }

    // m-th derivative of (x, y) at t, using d^m cos(kt) = k^m cos(kt + m pi/2).
    Vec2 derivative(double t, int m) const {
        double x = 0, y = 0;
        for (const Mode& mode : modes_) {
            double kt = mode.k * t;
            double ck = std::cos(kt), sk = std::sin(kt);
            double km = 1.0;
            for (int i = 0; i < m; ++i) km *= mode.k;
            double dc, ds; // m-th derivatives of cos(kt), sin(kt) over k^m
            switch (m & 3) {
                case 0: dc = ck; ds = sk; break;
                case 1: dc = -sk; ds = ck; break;
                case 2: dc = -ck; ds = -sk; break;
                default: dc = sk; ds = -ck; break;
            }
            x += km * (mode.p * dc + mode.q * ds);
            y += km * (mode.r * dc + mode.w * ds);
        }
        return {{x, y}};
    }

    Vec2 point(double t) const { return derivative(t, 0); }

    // point(t + h) - point(t), evaluated without the catastrophic
    // cancellation of subtracting two O(1) positions: per mode,
    //   cos(k(t+h)) - cos(kt) = -2 sin(kt + kh/2) sin(kh/2),
    //   sin(k(t+h)) - sin(kt) =  2 cos(kt + kh/2) sin(kh/2),
    // so chords stay fully accurate down to |h| near the underflow
    // threshold.  h may be negative; constant modes drop out exactly.
    Vec2 displacement(double t, double h) const {
        double x = 0, y = 0;
        for (const Mode& mode : modes_) {
            double mid = mode.k * (t + 0.5 * h);
            double half = std::sin(0.5 * mode.k * h);
            double dc = -2.0 * std::sin(mid) * half;
            double ds = 2.0 * std::cos(mid) * half;
            x += mode.p * dc + mode.q * ds;
            y += mode.r * dc + mode.w * ds;
        }
        return {{x, y}};
    }

    // Taylor coefficients of x(t + delta), y(t + delta) in delta up to `order`.
    void jets(double t, std::size_t order, TaylorJet& x, TaylorJet& y) const {
        x = TaylorJet(order);
        y = TaylorJet(order);
        double inv_fact = 1.0;
        for (std::size_t m = 0; m <= order; ++m) {
            if (m > 0) inv_fact /= static_cast<double>(m);
            Vec2 d = derivative(t, static_cast<int>(m));
            x.at(m) = d[0] * inv_fact;
            y.at(m) = d[1] * inv_fact;
        }
    }

    // Rigid motion: rotate by `angle` about the origin, then translate.
    PlaneCurve transformed(double angle, const Vec2& shift) const {
        double c = std::cos(angle), s = std::sin(angle);
        std::vector<Mode> out = modes_;
        for (Mode& m : out) {
            double p = m.p, q = m.q, r = m.r, w = m.w;
            m.p = c * p - s * r;
            m.r = s * p + c * r;
            m.q = c * q - s * w;
            m.w = s * q + c * w;
        }
        bool has_dc = false;
        for (Mode& m : out)
            if (m.k == 0) {
                m.p += shift[0];
                m.r += shift[1];
                has_dc = true;
            }
        if (!has_dc) out.push_back({0, shift[0], 0, shift[1], 0});
        return PlaneCurve(std::move(out));
    }

    PlaneCurve scaled(double factor) const {
        if (factor <= 0.0) throw DomainError("scaled: factor must be positive");
        std::vector<Mode> out = modes_;
        for (Mode& m : out) {
            m.p *= factor;
            m.q *= factor;
            m.r *= factor;
            m.w *= factor;
        }
        return PlaneCurve(std::move(out));
    }

    // Orientation reversal t -> -t: sine coefficients change sign.
    PlaneCurve reversed() const {
        std::vector<Mode> out = modes_;
        for (Mode& m : out) {
            m.q = -m.q;
            m.w = -m.w;
        }
        return PlaneCurve(std::move(out));
    }

  private:
    void validate_regular() const {
        constexpr int grid = 1024;
        constexpr double two_pi = 6.28318530717958647692;
        for (int j = 0; j < grid; ++j) {
            double t = two_pi * j / grid;
            Vec2 d = derivative(t, 1);
            if (norm(d) < 1e-12)
                throw SingularCurveError(
                    "curve speed vanishes near t = " + std::to_string(t));
        }
    }

    std::vector<Mode> modes_;
};

} // namespace layerbeta
