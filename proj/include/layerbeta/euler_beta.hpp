#pragma once

#include <cmath>

#include "layerbeta/complex_scalar.hpp"
#include "layerbeta/errors.hpp"
#include "layerbeta/log_gamma.hpp"

namespace layerbeta {

// The signed first moment that normalizes angular averages:
//
//   integral over [-1, 1] of  x (1-x)^a (1-x^2)^{b/2} dx
//     = -2^{a+b+1} a Gamma(a+b/2+1) Gamma(1+b/2) / Gamma(a+b+3)
//
// (substitute x = 1-2t and reduce to Euler's beta integral). Evaluated through
// log_gamma so large parameters neither overflow nor lose accuracy. The first
// Gamma argument can legitimately be negative; the complex branch keeps its
// sign, and the tiny imaginary residue of the exponential is discarded.
inline double euler_beta_moment(double a, double b) {
    if (!(a > -1.0) || !(b > -2.0))
        throw DomainError("euler_beta_moment: need a > -1 and b > -2");
    if (a == 0.0) return 0.0;
    Complex lg = log_gamma(Complex(a + 0.5 * b + 1.0, 0.0)) +
                 log_gamma(Complex(1.0 + 0.5 * b, 0.0)) -
                 log_gamma(Complex(a + b + 3.0, 0.0));
    return -a * std::pow(2.0, a + b + 1.0) * std::exp(lg).real();
}

} // namespace layerbeta
