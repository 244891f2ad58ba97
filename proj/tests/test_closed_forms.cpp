#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "layerbeta/closed_forms.hpp"
#include "layerbeta/errors.hpp"

using namespace layerbeta;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_gap(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// Independent evaluation of the per-point reduction (the value produced by
// integrating the kernel against one fixed point), via the C library's
// lgamma, valid for real s where both Gamma arguments are positive.
double per_point_reference(int d, double R, double s) {
    double num = std::lgamma(0.5 * (s + d - 3.0));
    double den = std::lgamma(0.5 * s + d - 1.0);
    double poly = s * (s - 2.0) * (s + d - 2.0);
    return std::pow(kPi, 0.5 * (d - 1)) * poly *
           std::exp((s + d - 4.0) * std::log(2.0) +
                    (s + d - 3.0) * std::log(R) + num - den);
}

SphereSpec circle(double R, SphereSpec::Variant v = SphereSpec::Variant::corrected) {
    return SphereSpec{2, R, v};
}
SphereSpec ball_shell(double R,
                      SphereSpec::Variant v = SphereSpec::Variant::corrected) {
    return SphereSpec{3, R, v};
}

} // namespace

TEST_CASE("unit sphere areas", "[closed-form]") {
    CHECK(std::abs(unit_sphere_area(1) - 2.0 * kPi) < 1e-13);
    CHECK(std::abs(unit_sphere_area(2) - 4.0 * kPi) < 1e-13);
    CHECK(std::abs(unit_sphere_area(3) - 2.0 * kPi * kPi) < 1e-13);
    CHECK_THROWS_AS(unit_sphere_area(0), DomainError);
}

TEST_CASE("circle closed form: frozen values", "[closed-form]") {
    CHECK(rel_gap(sphere_beta(circle(1.0), Complex(3.0)),
                  Complex(150.796447372310075446)) < 1e-13); // 48 pi
    CHECK(rel_gap(sphere_beta(circle(1.0, SphereSpec::Variant::printed),
                              Complex(3.0)),
                  Complex(75.398223686155037723)) < 1e-13); // 24 pi
    CHECK(rel_gap(sphere_beta(circle(1.0), Complex(2.5)),
                  Complex(53.2319680642782253213)) < 1e-13);
    CHECK(rel_gap(sphere_beta(circle(1.0), Complex(4.0)),
                  Complex(631.654681669718951605)) < 1e-13);
    CHECK(rel_gap(sphere_beta(circle(1.0), Complex(0.5)),
                  Complex(7.98479520964173379820)) < 1e-13);
    CHECK(rel_gap(sphere_beta(circle(1.0), Complex(3.0, 2.0)),
                  Complex(-280.256647981777906643, 158.212577854252524913)) <
          1e-13);
}

TEST_CASE("sphere closed form: frozen values", "[closed-form]") {
    CHECK(rel_gap(sphere_beta(ball_shell(1.0), Complex(1.0)),
                  Complex(-105.275780278286491934)) < 1e-13);
    CHECK(rel_gap(sphere_beta(ball_shell(1.0), Complex(3.0)),
                  Complex(505.323745335775161284)) < 1e-13);
    CHECK(rel_gap(sphere_beta(ball_shell(2.0), Complex(1.0)),
                  Complex(-842.206242226291935474)) < 1e-13);
    CHECK(rel_gap(sphere_beta(ball_shell(1.0), Complex(1.0, 1.0)),
                  Complex(-157.719102912179778166, -7.83657331247964211268)) <
          1e-13);
    // Finite, nonzero value at s = 0: the Gamma pole cancels the s factor,
    // so the s-prefactor zero seen for d = 2 does not survive to d = 3.
    CHECK(rel_gap(sphere_beta(ball_shell(1.0), Complex(0.0)),
                  Complex(-78.956835208714868951)) < 1e-13); // -8 pi^2
    CHECK(rel_gap(sphere_beta(ball_shell(1.5), Complex(0.0)),
                  Complex(-8.0 * kPi * kPi * 2.25)) < 1e-13);
}

TEST_CASE("closed form matches the per-point reduction times the measure",
          "[closed-form]") {
    for (double R : {1.0, 2.3}) {
        for (double s : {2.5, 3.0, 4.4}) {
            double expect2 = 2.0 * kPi * R * per_point_reference(2, R, s);
            CHECK(rel_gap(sphere_beta(circle(R), Complex(s)),
                          Complex(expect2)) < 1e-12);
            double expect3 =
                4.0 * kPi * R * R * per_point_reference(3, R, s);
            CHECK(rel_gap(sphere_beta(ball_shell(R), Complex(s)),
                          Complex(expect3)) < 1e-12);
        }
        // d = 3 at s = 1 exercises Gamma(1/2) in the reference
        double expect3 = 4.0 * kPi * R * R * per_point_reference(3, R, 1.0);
        CHECK(rel_gap(sphere_beta(ball_shell(R), Complex(1.0)),
                      Complex(expect3)) < 1e-12);
    }
}

TEST_CASE("variant, scaling, zeros, symmetry", "[closed-form]") {
    Complex s(2.7, 1.1);
    // exact factor-2 relation
    CHECK(sphere_beta(circle(1.3), s) ==
          2.0 * sphere_beta(circle(1.3, SphereSpec::Variant::printed), s));
    CHECK(sphere_beta(ball_shell(0.8), s) ==
          2.0 * sphere_beta(ball_shell(0.8, SphereSpec::Variant::printed), s));

    // R-scaling: R^{s+2d-4} relative to R = 1
    for (double R : {0.6, 3.7}) {
        Complex f2 = std::exp(s * std::log(R));
        CHECK(rel_gap(sphere_beta(circle(R), s),
                      f2 * sphere_beta(circle(1.0), s)) < 1e-12);
        Complex f3 = std::exp((s + 2.0) * std::log(R));
        CHECK(rel_gap(sphere_beta(ball_shell(R), s),
                      f3 * sphere_beta(ball_shell(1.0), s)) < 1e-12);
    }

    // polynomial zeros are exact
    CHECK(sphere_beta(circle(1.0), Complex(0.0)) == Complex(0.0));
    CHECK(sphere_beta(circle(2.0), Complex(2.0)) == Complex(0.0));
    CHECK(sphere_beta(ball_shell(1.0), Complex(2.0)) == Complex(0.0));
    CHECK(sphere_beta(ball_shell(1.0), Complex(-1.0)) == Complex(0.0));
    // denominator Gamma poles are zeros for d = 2
    CHECK(sphere_beta(circle(1.0), Complex(-2.0)) == Complex(0.0));
    CHECK(sphere_beta(circle(1.0), Complex(-4.0)) == Complex(0.0));

    // conjugate symmetry
    for (Complex z : {Complex(2.5, 1.5), Complex(0.3, -2.0)}) {
        CHECK(rel_gap(sphere_beta(circle(1.0), std::conj(z)),
                      std::conj(sphere_beta(circle(1.0), z))) < 1e-13);
        CHECK(rel_gap(sphere_beta(ball_shell(1.0), std::conj(z)),
                      std::conj(sphere_beta(ball_shell(1.0), z))) < 1e-13);
    }
}

TEST_CASE("closed form pole and domain errors", "[closed-form]") {
    for (double pole : {1.0, -1.0, -3.0, -5.0})
        CHECK_THROWS_AS(sphere_beta(circle(1.0), Complex(pole)), PoleError);
    CHECK_THROWS_AS(sphere_beta(ball_shell(1.0), Complex(-2.0)), PoleError);
    CHECK_THROWS_AS(sphere_beta(SphereSpec{4, 1.0}, Complex(3.0)),
                    DomainError);
    CHECK_THROWS_AS(sphere_beta(SphereSpec{2, 0.0}, Complex(3.0)),
                    DomainError);
    CHECK_THROWS_AS(sphere_beta(SphereSpec{2, -1.0}, Complex(3.0)),
                    DomainError);
}

TEST_CASE("closed form residues at every covered pole", "[closed-form]") {
    // circle ladder {1, -1, -3, -5}
    CHECK(std::abs(sphere_beta_residue(circle(1.0), 1.0) -
                   (-12.566370614359172954)) < 1e-8); // -4 pi = -2 length
    CHECK(std::abs(sphere_beta_residue(circle(1.0), -1.0) -
                   4.71238898038468985769) < 1e-8); // 3 pi / 2
    CHECK(std::abs(sphere_beta_residue(circle(1.0), -3.0) -
                   4.41786466911064674159) < 1e-8); // 45 pi / 32
    CHECK(std::abs(sphere_beta_residue(circle(1.0), -5.0) -
                   2.14757310303989772161) < 1e-8); // 175 pi / 256
    // printed variant halves them
    CHECK(std::abs(sphere_beta_residue(circle(1.0, SphereSpec::Variant::printed),
                                       1.0) -
                   (-6.283185307179586477)) < 1e-8);

    // sphere ladder {0, -2, -4}; residue at -2 is radius-independent
    CHECK(std::abs(sphere_beta_residue(ball_shell(1.0), 0.0)) < 1e-8);
    CHECK(std::abs(sphere_beta_residue(ball_shell(1.0), -2.0) -
                   78.956835208714868951) < 1e-8); // 8 pi^2
    CHECK(std::abs(sphere_beta_residue(ball_shell(2.0), -2.0) -
                   78.956835208714868951) < 1e-8);
    CHECK(std::abs(sphere_beta_residue(ball_shell(1.0), -4.0)) < 1e-8);

    CHECK_THROWS_AS(sphere_beta_residue(circle(1.0), 0.5), DomainError);
    CHECK_THROWS_AS(sphere_beta_residue(circle(1.0), 2.0), DomainError);
    CHECK_THROWS_AS(sphere_beta_residue(circle(1.0), -7.0), DomainError);
    CHECK_THROWS_AS(sphere_beta_residue(ball_shell(1.0), 1.0), DomainError);
}
