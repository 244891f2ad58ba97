#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "layerbeta/errors.hpp"
#include "layerbeta/jet2.hpp"
#include "layerbeta/quadrature.hpp"
#include "layerbeta/taylor_jet.hpp"
#include "layerbeta/vec.hpp"

namespace layerbeta {

// Frame data at one chart point.
struct SurfaceFrame {
    Vec3 position;
    Vec3 normal; // unit, outward
    Vec3 e1, e2; // orthonormal tangent basis
    double area_element = 0;
};

// One quadrature node on the surface: weight = area element * rule weights.
struct SurfaceNode {
    double t1 = 0, t2 = 0;
    Vec3 position;
    Vec3 normal; // outward
    double weight = 0;
};

// Closed surfaces of revolution-type charts: sphere and ellipsoid in polar
// coordinates (t1 = polar angle in (0, pi), t2 = azimuth), torus in
// (tube angle, axial angle). Charts are trigonometric in both variables, so
// the total-degree-4 jets needed by the graph construction are exact.
// An optional rigid pose (rotation + shift) supports invariance tests.
class ParamSurface {
  public:
    enum class Kind { sphere, ellipsoid, torus };

    static ParamSurface sphere(double radius) {
        if (radius <= 0.0) throw DomainError("sphere: radius must be positive");
        return ParamSurface(Kind::sphere, radius, radius, radius);
    }

    static ParamSurface ellipsoid(double a, double b, double c) {
        if (a <= 0.0 || b <= 0.0 || c <= 0.0)
            throw DomainError("ellipsoid: semi-axes must be positive");
        return ParamSurface(Kind::ellipsoid, a, b, c);
    }

    // Ring radius ring > tube radius tube > 0.
    static ParamSurface torus(double ring, double tube) {
        if (tube <= 0.0 || ring <= tube)
            throw DomainError("torus: need ring > tube > 0");
        return ParamSurface(Kind::torus, ring, tube, 0.0);
    }

    Kind kind() const { return kind_; }

    // Shape parameters: sphere {R, R, R}, ellipsoid {a, b, c},
    // torus {ring, tube, 0}.
    std::array<double, 3> parameters() const { return {{pa_, pb_, pc_}}; }

    ParamSurface transformed(const Mat3& rotation, const Vec3& shift) const {
        ParamSurface out = *this;
        out.rot_ = rotation * rot_;
        out.shift_ = rotation * shift_ + shift;
        out.posed_ = true;
        return out;
    }

    ParamSurface scaled(double factor) const {
        if (factor <= 0.0) throw DomainError("scaled: factor must be positive");
        ParamSurface out = *this;
        out.pa_ *= factor;
        out.pb_ *= factor;
        out.pc_ *= factor;
        out.shift_ = factor * out.shift_;
        return out;
    }

    // Whether the embedded surface is a surface of revolution about the z-axis
    // with the chart's t2 as the rotation angle (the engine exploits this to
    // collapse one azimuthal sum). A rigid pose breaks the alignment.
    bool azimuthally_symmetric() const {
        if (posed_) return false;
        return kind_ != Kind::ellipsoid || pa_ == pb_;
    }

    // Total-degree-4 Taylor jets of the three chart components about (t1, t2).
    std::array<Jet2, 3> chart_jet(double t1, double t2) const {
        TaylorJet c1 = trig_jet(std::cos(t1), -std::sin(t1));
        TaylorJet s1 = trig_jet(std::sin(t1), std::cos(t1));
        TaylorJet c2 = trig_jet(std::cos(t2), -std::sin(t2));
        TaylorJet s2 = trig_jet(std::sin(t2), std::cos(t2));
        TaylorJet one = TaylorJet::constant(1.0, 4);

        std::array<Jet2, 3> out;
        if (kind_ == Kind::torus) {
            TaylorJet ring = pa_ * one + pb_ * c1;
            out[0] = outer(ring, c2);
            out[1] = outer(ring, s2);
            out[2] = outer(pb_ * s1, one);
        } else {
            out[0] = outer(pa_ * s1, c2);
            out[1] = outer(pb_ * s1, s2);
            out[2] = outer(pc_ * c1, one);
        }
        if (posed_) {
            std::array<Jet2, 3> posed;
            for (int i = 0; i < 3; ++i) {
                posed[i] = rot_.m[i][0] * out[0] + rot_.m[i][1] * out[1] +
                           rot_.m[i][2] * out[2];
                posed[i].c[0] += shift_[i];
            }
            out = posed;
        }
        return out;
    }

    Vec3 chart_point(double t1, double t2) const {
        auto jets = chart_jet(t1, t2);
        return {{jets[0].c[0], jets[1].c[0], jets[2].c[0]}};
    }

    SurfaceFrame frame(double t1, double t2) const {
        auto jets = chart_jet(t1, t2);
        Vec3 d1 = {{jets[0].coeff(1, 0), jets[1].coeff(1, 0),
                    jets[2].coeff(1, 0)}};
        Vec3 d2 = {{jets[0].coeff(0, 1), jets[1].coeff(0, 1),
                    jets[2].coeff(0, 1)}};
        Vec3 raw = cross(d1, d2);
        // The torus chart's coordinate order makes d1 x d2 point inward.
        if (kind_ == Kind::torus) raw = -raw;
        double area = norm(raw);
        if (area < 1e-12)
            throw DegenerateChartError("chart degenerates at this point");
        SurfaceFrame f;
        f.position = {{jets[0].c[0], jets[1].c[0], jets[2].c[0]}};
        f.normal = (1.0 / area) * raw;
        f.e1 = normalized(d1);
        // Right-handed with the *inward* graph ordinate -normal; see
        // surface_graph_jet for why the graph is built over that axis.
        f.e2 = cross(-1.0 * f.normal, f.e1);
        f.area_element = area;
        return f;
    }

    // Quadrature grid: Gauss-Legendre in the polar angle (interior nodes keep
    // clear of the chart poles) and periodic trapezoid in the azimuth; the
    // torus is periodic in both directions.
    std::vector<SurfaceNode> nodes(std::size_t n1, std::size_t n2) const {
        QuadratureRule r1 = polar_rule(n1);
        QuadratureRule r2 =
            QuadratureRule::periodic_trapezoid(n2, 2.0 * pi());
        std::vector<SurfaceNode> out;
        out.reserve(n1 * n2);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j) {
                SurfaceFrame f = frame(r1.nodes[i], r2.nodes[j]);
                SurfaceNode node;
                node.t1 = r1.nodes[i];
                node.t2 = r2.nodes[j];
                node.position = f.position;
                node.normal = f.normal;
                node.weight = f.area_element * r1.weights[i] * r2.weights[j];
                out.push_back(node);
            }
        return out;
    }

    QuadratureRule polar_rule(std::size_t n1) const {
        return kind_ == Kind::torus
                   ? QuadratureRule::periodic_trapezoid(n1, 2.0 * pi())
                   : QuadratureRule::gauss_legendre(n1, 0.0, pi());
    }

  private:
    ParamSurface(Kind kind, double a, double b, double c)
        : kind_(kind), pa_(a), pb_(b), pc_(c), rot_(Mat3::identity()) {}

    static constexpr double pi() { return 3.14159265358979323846; }

    // Order-4 jet of a trig function from its value/derivative pair, using
    // the four-cycle of derivatives (v, d, -v, -d, v) / k!.
    static TaylorJet trig_jet(double value, double deriv) {
        TaylorJet j(4);
        j.at(0) = value;
        j.at(1) = deriv;
        j.at(2) = -value / 2.0;
        j.at(3) = -deriv / 6.0;
        j.at(4) = value / 24.0;
        return j;
    }

    // Outer product of a jet in delta_1 and a jet in delta_2.
    static Jet2 outer(const TaylorJet& u, const TaylorJet& v) {
        Jet2 out;
        for (std::size_t i = 0; i <= Jet2::max_degree; ++i)
            for (std::size_t j = 0; i + j <= Jet2::max_degree; ++j)
                out.coeff(i, j) = u[i] * v[j];
        return out;
    }

    Kind kind_;
    double pa_, pb_, pc_; // sphere/ellipsoid semi-axes, or torus (ring, tube)
    Mat3 rot_;
    Vec3 shift_{};
    bool posed_ = false;
};

inline double surface_measure(const std::vector<SurfaceNode>& nodes) {
    double area = 0;
    for (const SurfaceNode& n : nodes) area += n.weight;
    return area;
}

} // namespace layerbeta
