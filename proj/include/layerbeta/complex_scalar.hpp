#pragma once

#include <cmath>
#include <complex>

#include "layerbeta/errors.hpp"

namespace layerbeta {

// All spectral-parameter arithmetic runs on this type. Real s flows through
// the same code paths with zero imaginary part.
using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// r^s for r > 0 via the principal branch exp(s ln r); ln r is real, so
// conj(r^s) = r^conj(s) holds exactly. r = 0 is the caller's business.
inline Complex pow_pos(double r, const Complex& s) {
    if (s.imag() == 0.0) return Complex(std::exp(s.real() * std::log(r)), 0.0);
    return std::exp(s * std::log(r));
}

// 2^s, handy for closed forms.
inline Complex exp2c(const Complex& s) { return pow_pos(2.0, s); }

} // namespace layerbeta
