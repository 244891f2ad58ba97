#pragma once

// Exact beta function of round circles and spheres, everywhere in the
// s-plane, in two normalizations that differ by an overall factor of 2:
//
//   corrected:  B(s) = pi^{(d-1)/2} w_{d-1} 2^{s+d-4} R^{s+2d-4}
//                      s (s-2) (s+d-2) Gamma((s+d-3)/2) / Gamma(s/2+d-1)
//   printed:    exactly half of the above (exponent 2^{s+d-5}).
//
// The corrected normalization is the default: it is the one whose residue
// at s = 1 (d = 2) equals -2 x circumference, and whose residue at s = -2
// (d = 3) equals 8 pi^2 on every sphere — both of which the residue
// engine reproduces from curvature integrals — and the one direct
// quadrature of the double integral reproduces.  The halved variant is
// retained so the discrepancy stays visible instead of being papered
// over.
//
// d = 2 evaluates through log-Gamma differences (stable for large
// |Im s|); its poles are s = 1, -1, -3, -5, ...  d = 3 first reduces
// Gamma(z)/Gamma(z+2) = 1/(z(z+1)) and cancels the resulting z against
// the s prefactor, leaving the rational form
//
//     B(s) = 2^{s+3} pi^2 R^{s+2} (s-2)(s+1) / (s+2)
//
// whose sole pole is s = -2.  A side effect of that cancellation worth
// stating: B is *finite and nonzero* at s = 0 for d = 3 (the Gamma pole
// eats the factor of s), B(0) = -8 pi^2 R^2, even though the s-prefactor
// makes d = 2 vanish there.

#include <cmath>
#include <complex>

#include "layerbeta/beta_engine.hpp"
#include "layerbeta/complex_scalar.hpp"
#include "layerbeta/errors.hpp"
#include "layerbeta/log_gamma.hpp"

namespace layerbeta {

struct SphereSpec {
    enum class Variant { printed, corrected };
    int d = 2;          // ambient dimension, 2 or 3
    double R = 1.0;     // radius
    Variant variant = Variant::corrected;
};

// Area of the unit n-sphere: 2 pi^{(n+1)/2} / Gamma((n+1)/2).
inline double unit_sphere_area(int n) {
    if (n < 1) throw DomainError("unit_sphere_area: need n >= 1");
    const double pi = 3.14159265358979323846;
    double half = 0.5 * double(n + 1);
    return 2.0 * std::exp(half * std::log(pi) - log_gamma(Complex(half)).real());
}

namespace detail {

inline void validate(const SphereSpec& spec) {
    if (spec.d != 2 && spec.d != 3)
        throw DomainError("sphere closed form: ambient dimension must be 2 or 3");
    if (!(spec.R > 0.0)) throw DomainError("sphere closed form: need R > 0");
}

inline bool near_nonpositive_integer(Complex z) {
    double k = std::round(z.real());
    return k <= 0.0 && std::abs(z.real() - k) <= 1e-12 &&
           std::abs(z.imag()) <= 1e-12;
}

} // namespace detail

inline Complex sphere_beta(const SphereSpec& spec, Complex s) {
    detail::validate(spec);
    const double pi = 3.14159265358979323846;
    Complex value;
    if (spec.d == 2) {
        Complex den_arg = 0.5 * s + 1.0;
        if (detail::near_nonpositive_integer(den_arg))
            return Complex(0.0); // 1/Gamma zero beats everything else
        // log_gamma throws PoleError at s = 1, -1, -3, ... as required
        Complex lg = log_gamma(0.5 * (s - 1.0)) - log_gamma(den_arg);
        Complex prefactor = s * s * (s - 2.0);
        value = 2.0 * std::pow(pi, 1.5) *
                std::exp(lg + (s - 2.0) * std::log(2.0) +
                         s * std::log(spec.R)) *
                prefactor;
    } else {
        if (std::abs(s + 2.0) <= 1e-12)
            throw PoleError("sphere closed form (d=3): pole at s = -2");
        value = 8.0 * pi * pi *
                std::exp(s * std::log(2.0) + (s + 2.0) * std::log(spec.R)) *
                (s - 2.0) * (s + 1.0) / (s + 2.0);
    }
    if (spec.variant == SphereSpec::Variant::printed) value *= 0.5;
    return value;
}

// Residue of sphere_beta at one of its covered pole locations, obtained by
// Richardson extrapolation of (s - pole) B(s) — no hand-coded Laurent
// coefficients.  Locations where B is finite legitimately return 0.
inline double sphere_beta_residue(const SphereSpec& spec, double pole) {
    detail::validate(spec);
    double top = double(3 - spec.d);
    double offset = (top - pole) / 2.0;
    if (pole < -5.0 || pole > top ||
        std::abs(offset - std::round(offset)) > 1e-12)
        throw DomainError(
            "sphere_beta_residue: pole must lie in {3-d, 1-d, ...} down to -5");
    Complex r = residue_extrapolate(
        [&](Complex s) { return sphere_beta(spec, s); }, pole, 12, 1e-9);
    return r.real();
}

} // namespace layerbeta
