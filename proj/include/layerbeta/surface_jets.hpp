#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "layerbeta/errors.hpp"
#include "layerbeta/jet2.hpp"
#include "layerbeta/param_surface.hpp"
#include "layerbeta/vec.hpp"

namespace layerbeta {

// Adapted-frame graph data at one surface point: in the frame (e1, e2, -normal)
// the surface is locally the graph
//   u3 = f(u1, u2) = b1 u1^2 + b2 u1 u2 + b3 u2^2
//        + c1 u1^3 + c2 u1^2 u2 + c3 u1 u2^2 + c4 u2^3
//        + d1 u1^4 + d2 u1^3 u2 + d3 u1^2 u2^2 + d4 u1 u2^3 + d5 u2^4 + ...
// The ordinate axis points along the *inward* normal, so convex surfaces
// parametrized with outward `normal` (spheres) get positive b's.
struct SurfaceJet {
    Vec3 base;
    Vec3 e1, e2;  // orthonormal tangent frame
    Vec3 normal;  // unit, outward
    std::array<double, 3> b{};
    std::array<double, 4> c{};
    std::array<double, 5> d{};
};

// Graph coefficients at chart point (t1, t2). The tangential coordinates of
// the chart are inverted by two-variable series reversion and substituted into
// the normal coordinate, all to total degree 4. `frame_angle` rotates the
// tangent frame (e1, e2) in the tangent plane before the construction —
// the invariant monomials downstream must not care.
inline SurfaceJet surface_graph_jet(const ParamSurface& surface, double t1,
                                    double t2, double frame_angle = 0.0) {
    SurfaceFrame fr = surface.frame(t1, t2);
    Vec3 e1 = fr.e1, e2 = fr.e2;
    if (frame_angle != 0.0) {
        double ca = std::cos(frame_angle), sa = std::sin(frame_angle);
        Vec3 r1 = ca * e1 + sa * e2;
        Vec3 r2 = -sa * e1 + ca * e2;
        e1 = r1;
        e2 = r2;
    }
    Vec3 ordinate = -1.0 * fr.normal; // graph axis, inward

    std::array<Jet2, 3> chart = surface.chart_jet(t1, t2);
    for (Jet2& component : chart) component.c[0] = 0.0; // displacement jets

    auto project = [&](const Vec3& axis) {
        return axis[0] * chart[0] + axis[1] * chart[1] + axis[2] * chart[2];
    };
    Jet2 xi1 = project(e1);
    Jet2 xi2 = project(e2);
    Jet2 eta = project(ordinate);

    Jet2 d1, d2;
    revert2(xi1, xi2, d1, d2);
    Jet2 f = compose(eta, d1, d2);

    SurfaceJet jet;
    jet.base = fr.position;
    jet.e1 = e1;
    jet.e2 = e2;
    jet.normal = fr.normal;
    jet.b = {f.coeff(2, 0), f.coeff(1, 1), f.coeff(0, 2)};
    jet.c = {f.coeff(3, 0), f.coeff(2, 1), f.coeff(1, 2), f.coeff(0, 3)};
    jet.d = {f.coeff(4, 0), f.coeff(3, 1), f.coeff(2, 2), f.coeff(1, 3),
             f.coeff(0, 4)};
    return jet;
}

// Re-expands the same local graph in a tangent frame rotated by `angle`:
// f_rot(u) = f(R_{-angle} u), recomputed coefficient-wise. Used to test that
// invariant monomials do not depend on the frame.
inline SurfaceJet rotate_tangent_frame(const SurfaceJet& jet, double angle) {
    double ca = std::cos(angle), sa = std::sin(angle);
    Jet2 f;
    f.coeff(2, 0) = jet.b[0];
    f.coeff(1, 1) = jet.b[1];
    f.coeff(0, 2) = jet.b[2];
    f.coeff(3, 0) = jet.c[0];
    f.coeff(2, 1) = jet.c[1];
    f.coeff(1, 2) = jet.c[2];
    f.coeff(0, 3) = jet.c[3];
    f.coeff(4, 0) = jet.d[0];
    f.coeff(3, 1) = jet.d[1];
    f.coeff(2, 2) = jet.d[2];
    f.coeff(1, 3) = jet.d[3];
    f.coeff(0, 4) = jet.d[4];
    // New coordinates u' satisfy u = R_{angle} u' in the old frame:
    // u1 = ca u1' - sa u2', u2 = sa u1' + ca u2'.
    Jet2 u1 = ca * Jet2::variable_x() - sa * Jet2::variable_y();
    Jet2 u2 = sa * Jet2::variable_x() + ca * Jet2::variable_y();
    Jet2 g = compose(f, u1, u2);

    SurfaceJet out = jet;
    out.e1 = ca * jet.e1 + sa * jet.e2;
    out.e2 = -sa * jet.e1 + ca * jet.e2;
    out.b = {g.coeff(2, 0), g.coeff(1, 1), g.coeff(0, 2)};
    out.c = {g.coeff(3, 0), g.coeff(2, 1), g.coeff(1, 2), g.coeff(0, 3)};
    out.d = {g.coeff(4, 0), g.coeff(3, 1), g.coeff(2, 2), g.coeff(1, 3),
             g.coeff(0, 4)};
    return out;
}

// Flips the normal orientation: the graph function changes sign.
inline SurfaceJet flip_orientation(const SurfaceJet& jet) {
    SurfaceJet out = jet;
    out.normal = -1.0 * jet.normal;
    for (double& v : out.b) v = -v;
    for (double& v : out.c) v = -v;
    for (double& v : out.d) v = -v;
    return out;
}

} // namespace layerbeta
