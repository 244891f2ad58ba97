#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "layerbeta/errors.hpp"
#include "layerbeta/plane_curve.hpp"
#include "layerbeta/quadrature.hpp"
#include "layerbeta/taylor_jet.hpp"
#include "layerbeta/vec.hpp"

namespace layerbeta {

// Adapted frame data at one curve point: the curve is locally the graph
// u2 = f(u1) = a2 u1^2 + a3 u1^3 + ... over its tangent line, with the u1-axis
// along `tangent` and the u2-axis along -`normal` (the normal field itself is
// outward: the clockwise rotation of the tangent, so that a convex
// counterclockwise curve such as a circle gets positive a2).
struct CurveJet {
    Vec2 base;
    Vec2 tangent; // unit
    Vec2 normal;  // unit, outward convention
    std::array<double, 6> a{}; // a2..a7 of the graph expansion
    double coeff(int i) const { return a[static_cast<std::size_t>(i - 2)]; }
};

namespace detail {

inline void parametrization_jets(const PlaneCurve& curve, double t,
                                 std::size_t order, TaylorJet& x, TaylorJet& y,
                                 double min_speed = 1e-12) {
    curve.jets(t, order, x, y);
    double speed = std::sqrt(x[1] * x[1] + y[1] * y[1]);
    if (speed < min_speed)
        throw SingularCurveError("curve speed vanishes at evaluation point");
}

} // namespace detail

// Signed curvature and its arc-length derivatives (kappa_0 .. kappa_n, n <= 5)
// at parameter t. kappa_0 = (x'y'' - y'x'') / speed^3 is positive for a
// counterclockwise circle, matching the outward-normal convention. Higher
// entries apply the unit-speed derivative (1/speed) d/dt repeatedly, carried
// out on truncated Taylor series so every derivative is exact.
inline std::vector<double> curvature_jet(const PlaneCurve& curve, double t,
                                         std::size_t order) {
    if (order > 5) throw DomainError("curvature_jet: order must be <= 5");
    TaylorJet x, y;
    detail::parametrization_jets(curve, t, order + 2, x, y);

    TaylorJet xp = derivative(x), yp = derivative(y); // order+1
    TaylorJet xpp = derivative(xp), ypp = derivative(yp); // order
    TaylorJet speed_sq = xp * xp + yp * yp; // order
    TaylorJet inv_speed = pow_jet(speed_sq, -0.5); // speed^-1, order
    TaylorJet inv_speed3 = pow_jet(speed_sq, -1.5);
    TaylorJet kappa = (xp * ypp - yp * xpp) * inv_speed3; // order

    std::vector<double> out;
    out.reserve(order + 1);
    TaylorJet cur = kappa;
    out.push_back(cur[0]);
    for (std::size_t m = 1; m <= order; ++m) {
        cur = derivative(cur) * inv_speed; // truncates to cur's new order
        out.push_back(cur[0]);
    }
    return out;
}

// Graph coefficients a2..a7 at parameter t. The tangential coordinate
// xi(delta) = <gamma(t+delta) - gamma(t), T> is inverted by series reversion
// and substituted into the normal coordinate; the expansion is carried to
// tangential order 8 internally (a8 participates in the truncation but is not
// exposed).
inline CurveJet graph_jet(const PlaneCurve& curve, double t) {
    constexpr std::size_t ord = 8;
    TaylorJet x, y;
    detail::parametrization_jets(curve, t, ord, x, y);

    Vec2 base = {{x[0], y[0]}};
    Vec2 tang = normalized(Vec2{{x[1], y[1]}});
    Vec2 ordinate = rot_ccw(tang); // graph axis, inward for ccw convex curves

    TaylorJet dx = x, dy = y;
    dx.at(0) = 0.0;
    dy.at(0) = 0.0;
    TaylorJet xi = tang[0] * dx + tang[1] * dy;       // xi(0)=0, xi'(0)=speed
    TaylorJet eta = ordinate[0] * dx + ordinate[1] * dy;

    TaylorJet delta_of_x = revert(xi);
    TaylorJet f = compose(eta, delta_of_x);

    CurveJet jet;
    jet.base = base;
    jet.tangent = tang;
    jet.normal = rot_cw(tang);
    for (int i = 2; i <= 7; ++i)
        jet.a[static_cast<std::size_t>(i - 2)] = f[static_cast<std::size_t>(i)];
    return jet;
}

// Arc-length quadrature data: node positions, outward normals, and weights
// speed(t_j) * w_j, so that sums over nodes approximate integrals dA.
struct CurveNode {
    double t = 0;
    Vec2 position;
    Vec2 tangent;
    Vec2 normal; // outward
    double speed = 0;
    double weight = 0;
};

struct CurveMeasure {
    double length = 0;
    std::vector<CurveNode> nodes;
};

inline CurveMeasure curve_measure(const PlaneCurve& curve,
                                  const QuadratureRule& rule) {
    CurveMeasure out;
    out.nodes.reserve(rule.nodes.size());
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        CurveNode node;
        node.t = rule.nodes[j];
        node.position = curve.point(node.t);
        Vec2 d = curve.derivative(node.t, 1);
        node.speed = norm(d);
        node.tangent = (1.0 / node.speed) * d;
        node.normal = rot_cw(node.tangent);
        node.weight = node.speed * rule.weights[j];
        out.length += node.weight;
        out.nodes.push_back(node);
    }
    return out;
}

} // namespace layerbeta
