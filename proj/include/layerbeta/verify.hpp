#pragma once

// Verification harness: the library's acceptance criteria as runnable named
// checks.  Each check compares a computed value against its expected value
// with an explicit tolerance; a report passes iff every check passes.
//
// Levels: `full` runs the criteria at their contract node counts; `fast`
// caps node counts for a quick desk check, loosening the handful of
// tolerances that genuinely depend on resolution (the loosened value is
// reported in the check, so the output states what was actually enforced).

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "layerbeta/beta_engine.hpp"
#include "layerbeta/closed_forms.hpp"
#include "layerbeta/curve_jets.hpp"
#include "layerbeta/errors.hpp"
#include "layerbeta/invariants.hpp"
#include "layerbeta/param_surface.hpp"
#include "layerbeta/plane_curve.hpp"
#include "layerbeta/quadrature.hpp"
#include "layerbeta/random_shapes.hpp"
#include "layerbeta/residues.hpp"
#include "layerbeta/surface_jets.hpp"

namespace layerbeta {

enum class VerifyLevel { fast, full };

struct VerifyCheck {
    std::string criterion; // stable id of the acceptance criterion
    std::string name;      // kebab-case check name
    double expected = 0;
    double actual = 0;
    double tolerance = 0; // absolute bound on |actual - expected|
    bool pass = false;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::full;
    std::vector<VerifyCheck> checks;
    bool pass = true;
};

namespace detail {

inline void add_check(VerifyReport& report, const char* criterion,
                      const char* name, double expected, double actual,
                      double tolerance) {
    const bool ok = std::abs(actual - expected) <= tolerance;
    report.checks.push_back(
        {criterion, name, expected, actual, tolerance, ok});
    report.pass = report.pass && ok;
}

inline double relative_gap(double a, double b) {
    return std::abs(a - b) / (1.0 + std::abs(a));
}

} // namespace detail

inline VerifyReport run_verification(VerifyLevel level) {
    constexpr double pi = 3.14159265358979323846;
    constexpr double two_pi = 2.0 * pi;
    const bool fast = (level == VerifyLevel::fast);

    VerifyReport report;
    report.level = level;

    // AC-1: direct double-layer quadrature on the unit circle at s = 3
    // reproduces 48 pi — adjudicating the factor-2 question in favor of the
    // corrected closed form (the uncorrected variant would print 24 pi and
    // miss by a ratio of exactly 2).
    {
        const double target = 48.0 * pi;
        const BetaSample sample = beta_double_layer(
            PlaneCurve::circle(1.0), Complex(3.0), fast ? 1024 : 2048);
        detail::add_check(report, "AC-1", "circle-s3-quadrature-vs-closed-form",
                          target, sample.value.real(), 1e-6 * target);
    }

    // AC-2: on the unit circle the four residue routes (curvature
    // polynomial, graph polynomial, closed form, Richardson extrapolation)
    // agree at every covered pole.
    {
        ResidueReportOptions options;
        options.with_extrapolation = true;
        const std::vector<ResidueReport> entries = residue_report(
            PlaneCurve::circle(1.0),
            QuadratureRule::periodic_trapezoid(64, two_pi), options);
        double worst = 0;
        for (const ResidueReport& entry : entries)
            worst = std::max(worst, entry.max_pairwise_gap);
        detail::add_check(report, "AC-2", "circle-residue-routes-agree", 0.0,
                          worst, 1e-8);
    }

    // AC-3: the two residue routes agree on an ellipse and a family of
    // random Fourier curves.
    {
        const QuadratureRule rule =
            QuadratureRule::periodic_trapezoid(fast ? 256 : 512, two_pi);
        std::vector<PlaneCurve> curves;
        curves.push_back(PlaneCurve::ellipse(2.0, 1.0));
        const unsigned count = fast ? 3 : 10;
        for (unsigned seed = 1; seed <= count; ++seed)
            curves.push_back(random_fourier_curve(seed));
        double worst = 0;
        for (const PlaneCurve& curve : curves) {
            const ResidueTable a = curve_residues_invariant(curve, rule);
            const ResidueTable b = curve_residues_jet(curve, rule);
            for (int pole : curve_residue_poles)
                worst = std::max(
                    worst, detail::relative_gap(a.at(pole), b.at(pole)));
        }
        detail::add_check(report, "AC-3", "curve-residue-route-agreement", 0.0,
                          worst, 1e-8);
    }

    // AC-4: sphere residues are {0, 8 pi^2, 0} for both radii (the middle
    // residue is radius-independent).
    {
        const std::size_t n1 = fast ? 16 : 32, n2 = fast ? 32 : 64;
        const double middle = 8.0 * pi * pi;
        double worst = 0;
        for (double radius : {1.0, 2.0}) {
            const ParamSurface sphere = ParamSurface::sphere(radius);
            for (const ResidueTable& table :
                 {surface_residues_invariant(sphere, n1, n2),
                  surface_residues_jet(sphere, n1, n2)}) {
                worst = std::max({worst, std::abs(table.at(0)),
                                  std::abs(table.at(-2) - middle),
                                  std::abs(table.at(-4))});
            }
        }
        detail::add_check(report, "AC-4", "sphere-residues-closed-values", 0.0,
                          worst, 1e-9);
    }

    // AC-5: the two residue routes agree on generic surfaces.
    {
        const std::size_t n = fast ? 16 : 32;
        double worst = 0;
        for (const ParamSurface& surface :
             {ParamSurface::torus(2.0, 1.0),
              ParamSurface::ellipsoid(1.5, 1.0, 0.8)}) {
            const ResidueTable a = surface_residues_invariant(surface, n, n);
            const ResidueTable b = surface_residues_jet(surface, n, n);
            for (int pole : surface_residue_poles)
                worst = std::max(
                    worst, detail::relative_gap(a.at(pole), b.at(pole)));
        }
        detail::add_check(report, "AC-5", "surface-residue-route-agreement",
                          0.0, worst, 1e-6);
    }

    // AC-6: the double-layer beta vanishes identically at s = 2 (a
    // divergence-theorem identity), scaled by the squared measure.
    {
        const std::size_t n = fast ? 256 : 512;
        const std::size_t n1 = fast ? 16 : 32, n2 = fast ? 32 : 64;
        double worst = 0;
        for (const PlaneCurve& curve :
             {PlaneCurve::circle(1.0), PlaneCurve::ellipse(2.0, 1.0)}) {
            const double length =
                curve_measure(curve,
                              QuadratureRule::periodic_trapezoid(n, two_pi))
                    .length;
            const Complex value =
                beta_double_layer(curve, Complex(2.0), n).value;
            worst = std::max(worst, std::abs(value) / (length * length));
        }
        for (const ParamSurface& surface :
             {ParamSurface::sphere(1.0), ParamSurface::torus(2.0, 1.0)}) {
            const double area = surface_measure(surface.nodes(n1, n2));
            const Complex value =
                beta_double_layer(surface, Complex(2.0), n1, n2).value;
            worst = std::max(worst, std::abs(value) / (area * area));
        }
        detail::add_check(report, "AC-6", "double-layer-vanishes-at-two", 0.0,
                          worst, 1e-8);
    }

    // AC-7: single-layer identities.  B(0) equals the squared total measure
    // for every shape; at s = 1 the circle gives 16 pi and the unit sphere
    // 64 pi^2 / 3.
    {
        const std::size_t n = fast ? 256 : 512;
        const std::size_t n1 = fast ? 16 : 32, n2 = fast ? 32 : 64;
        double worst = 0;
        for (const PlaneCurve& curve :
             {PlaneCurve::circle(1.0), PlaneCurve::ellipse(2.0, 1.0)}) {
            const double length =
                curve_measure(curve,
                              QuadratureRule::periodic_trapezoid(n, two_pi))
                    .length;
            const Complex value =
                beta_single_layer(curve, Complex(0.0), n).value;
            worst = std::max(
                worst,
                std::abs(value - Complex(length * length)) / (length * length));
        }
        for (const ParamSurface& surface :
             {ParamSurface::sphere(1.0), ParamSurface::torus(2.0, 1.0)}) {
            const double area = surface_measure(surface.nodes(n1, n2));
            const Complex value =
                beta_single_layer(surface, Complex(0.0), n1, n2).value;
            worst = std::max(
                worst, std::abs(value - Complex(area * area)) / (area * area));
        }
        detail::add_check(report, "AC-7", "single-layer-at-zero-measure-squared",
                          0.0, worst, 1e-10);

        const double circle_target = 16.0 * pi;
        const BetaSample circle_sample = beta_single_layer(
            PlaneCurve::circle(1.0), Complex(1.0), fast ? 1024 : 4096);
        detail::add_check(report, "AC-7", "circle-single-layer-s1",
                          circle_target, circle_sample.value.real(),
                          (fast ? 1e-6 : 1e-7) * circle_target);

        const double sphere_target = 64.0 * pi * pi / 3.0;
        const BetaSample sphere_sample = beta_single_layer(
            ParamSurface::sphere(1.0), Complex(1.0), fast ? 96 : 256,
            fast ? 192 : 512);
        detail::add_check(report, "AC-7", "sphere-single-layer-s1",
                          sphere_target, sphere_sample.value.real(),
                          (fast ? 2e-6 : 1e-7) * sphere_target);
    }

    // AC-8: the curvature jet and the graph coefficients are two
    // computations of the same data; the conversion polynomials hold on
    // random curves at random points.
    {
        std::mt19937 rng(8675309);
        std::uniform_real_distribution<double> angle(0.0, two_pi);
        const unsigned count = fast ? 8 : 20;
        double worst = 0;
        for (unsigned i = 0; i < count; ++i) {
            const PlaneCurve curve = random_fourier_curve(1000 + i);
            const double t = angle(rng);
            const std::vector<double> kappa = curvature_jet(curve, t, 5);
            const CurveJet jet = graph_jet(curve, t);
            const double a2 = jet.coeff(2), a3 = jet.coeff(3),
                         a4 = jet.coeff(4), a5 = jet.coeff(5),
                         a6 = jet.coeff(6), a7 = jet.coeff(7);
            const double predicted[6] = {
                2.0 * a2,
                6.0 * a3,
                24.0 * a4 - 24.0 * a2 * a2 * a2,
                120.0 * a5 - 456.0 * a2 * a2 * a3,
                720.0 * a6 - 3264.0 * a2 * a2 * a4 - 3456.0 * a2 * a3 * a3 +
                    1824.0 * a2 * a2 * a2 * a2 * a2,
                5040.0 * a7 - 26400.0 * a2 * a2 * a5 -
                    57312.0 * a2 * a3 * a4 - 10368.0 * a3 * a3 * a3 +
                    87648.0 * a2 * a2 * a2 * a2 * a3,
            };
            for (int j = 0; j <= 5; ++j)
                worst = std::max(worst, std::abs(kappa[j] - predicted[j]) /
                                            (1.0 + std::abs(kappa[j])));
        }
        detail::add_check(report, "AC-8", "curvature-vs-graph-coefficients",
                          0.0, worst, 1e-9);
    }

    // AC-9: the invariant monomials do not depend on the tangent frame;
    // under a normal flip the mean-curvature monomial changes sign (it is
    // odd in the normal) and the other nine are unchanged.  Sphere jets
    // reproduce their closed-form coefficients.
    {
        std::mt19937 rng(900913);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        std::uniform_real_distribution<double> angle(0.0, two_pi);
        const unsigned count = fast ? 8 : 20;
        double worst = 0;
        auto fields = [](const InvariantMonomials& m) {
            return std::vector<double>{m.H0, m.H1, m.H0_pow4, m.H1_sq,
                                       m.H0sq_H1, m.H2, m.H0H3, m.H4,
                                       m.H5, m.H6};
        };
        for (unsigned i = 0; i < count; ++i) {
            SurfaceJet jet;
            jet.base = {{0.0, 0.0, 0.0}};
            jet.e1 = {{1.0, 0.0, 0.0}};
            jet.e2 = {{0.0, 1.0, 0.0}};
            jet.normal = {{0.0, 0.0, 1.0}};
            for (double& v : jet.b) v = coeff(rng);
            for (double& v : jet.c) v = coeff(rng);
            for (double& v : jet.d) v = coeff(rng);

            const std::vector<double> base = fields(invariant_monomials(jet));
            const std::vector<double> rotated = fields(
                invariant_monomials(rotate_tangent_frame(jet, angle(rng))));
            const std::vector<double> flipped =
                fields(invariant_monomials(flip_orientation(jet)));
            for (std::size_t j = 0; j < base.size(); ++j) {
                const double scale = 1.0 + std::abs(base[j]);
                worst = std::max(worst,
                                 std::abs(rotated[j] - base[j]) / scale);
                const double expected_flip = (j == 0) ? -base[j] : base[j];
                worst = std::max(
                    worst, std::abs(flipped[j] - expected_flip) / scale);
            }
        }
        detail::add_check(report, "AC-9",
                          "invariant-monomials-frame-independence", 0.0, worst,
                          1e-8);

        double jet_worst = 0;
        for (double radius : {1.0, 2.0}) {
            const SurfaceJet jet =
                surface_graph_jet(ParamSurface::sphere(radius), 1.1, 0.7);
            const double b_target = 0.5 / radius;
            const double d_outer = 1.0 / (8.0 * radius * radius * radius);
            jet_worst = std::max(
                {jet_worst, std::abs(jet.b[0] - b_target),
                 std::abs(jet.b[1]), std::abs(jet.b[2] - b_target),
                 std::abs(jet.d[0] - d_outer), std::abs(jet.d[1]),
                 std::abs(jet.d[2] - 2.0 * d_outer), std::abs(jet.d[3]),
                 std::abs(jet.d[4] - d_outer)});
        }
        detail::add_check(report, "AC-9", "sphere-jet-coefficients", 0.0,
                          jet_worst, 1e-10);
    }

    // AC-10: Richardson extrapolation of (s - 1) B(s) recovers the pole-1
    // residue -4 pi, both over the exact closed form and over graded direct
    // quadrature approaching the pole along s = 1 + 2^{-k}.
    {
        const double target = -4.0 * pi;
        SphereSpec circle_spec;
        circle_spec.d = 2;
        circle_spec.R = 1.0;
        const double closed =
            residue_extrapolate(
                [&circle_spec](Complex s) {
                    return sphere_beta(circle_spec, s);
                },
                1.0, 12, 1e-9)
                .real();
        detail::add_check(report, "AC-10", "pole-extrapolation-closed-form",
                          target, closed, 0.01 * std::abs(target));

        const PlaneCurve circle = PlaneCurve::circle(1.0);
        const std::size_t inner = fast ? 2048 : 4096;
        const double graded =
            residue_extrapolate(
                [&](Complex s) {
                    return beta_double_layer_graded(circle, s, 64, inner)
                        .value;
                },
                1.0, 6, 1.0)
                .real();
        detail::add_check(report, "AC-10",
                          "pole-extrapolation-graded-quadrature", target,
                          graded, 0.05 * std::abs(target));
    }

    // AC-11: homogeneity under dilation (exponent s + 2d - 4 for the double
    // layer in ambient dimension d) and rigid-motion invariance.
    {
        const PlaneCurve curve = random_fourier_curve(271828);
        const Complex s_curve(3.0);
        const std::size_t n = fast ? 128 : 256;
        const double base =
            beta_double_layer(curve, s_curve, n).value.real();
        const double dilated =
            beta_double_layer(curve.scaled(2.0), s_curve, n).value.real();
        // curves: exponent s + 2*2 - 4 = s, so lambda = 2, s = 3 gives 8x.
        detail::add_check(report, "AC-11", "curve-beta-scaling-law",
                          8.0 * base, dilated, 1e-8 * std::abs(8.0 * base));

        const ParamSurface torus = ParamSurface::torus(2.0, 1.0);
        const Complex s_surface(2.5);
        const std::size_t n1 = fast ? 12 : 24, n2 = fast ? 24 : 48;
        const double surface_base =
            beta_double_layer(torus, s_surface, n1, n2).value.real();
        const double surface_dilated =
            beta_double_layer(torus.scaled(2.0), s_surface, n1, n2)
                .value.real();
        // surfaces: exponent s + 2*3 - 4 = s + 2 = 4.5.
        const double predicted = std::pow(2.0, 4.5) * surface_base;
        detail::add_check(report, "AC-11", "surface-beta-scaling-law",
                          predicted, surface_dilated,
                          1e-8 * std::abs(predicted));

        double worst = 0;
        const double moved = beta_double_layer(
                                 curve.transformed(0.8, {{1.5, -0.4}}),
                                 s_curve, n)
                                 .value.real();
        worst = std::max(worst, std::abs(moved - base) / std::abs(base));
        const Mat3 rot = Mat3::rotation({{0.3, -0.2, 0.9}}, 0.7);
        const double surface_moved =
            beta_double_layer(torus.transformed(rot, {{0.4, 1.0, -0.6}}),
                              s_surface, n1, n2)
                .value.real();
        worst = std::max(worst, std::abs(surface_moved - surface_base) /
                                    std::abs(surface_base));
        detail::add_check(report, "AC-11", "beta-rigid-motion-invariance",
                          0.0, worst, 1e-8);
    }

    return report;
}

} // namespace layerbeta
