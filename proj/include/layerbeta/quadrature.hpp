#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "layerbeta/errors.hpp"

namespace layerbeta {

// A one-dimensional quadrature rule: paired nodes and weights.
//
// Two constructions are provided, chosen for what they are exact on:
//  - periodic_trapezoid: equal weights on t_j = j*period/n. Spectrally
//    accurate (indeed exact for trigonometric polynomials of degree < n)
//    for smooth periodic integrands, which is the backbone of every closed
//    curve and closed chart integral here.
//  - gauss_legendre: classical Gauss nodes on [a, b], exact on polynomials
//    of degree 2n-1. Used where the integrand is smooth but not periodic.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static QuadratureRule periodic_trapezoid(std::size_t n, double period) {
        if (n == 0) throw DomainError("periodic_trapezoid: need n >= 1");
        QuadratureRule r;
        r.nodes.resize(n);
        r.weights.assign(n, period / static_cast<double>(n));
        for (std::size_t j = 0; j < n; ++j)
            r.nodes[j] = period * static_cast<double>(j) / static_cast<double>(n);
        return r;
    }

    static QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
        if (n == 0) throw DomainError("gauss_legendre: need n >= 1");
        QuadratureRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        const double pi = 3.14159265358979323846;
        // Newton iteration on P_n from the standard cosine initial guess;
        // each root converges in a handful of steps.
        for (std::size_t i = 0; i < n; ++i) {
            double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(n) + 0.5));
            double dp = 0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x; // P_{k-1}, P_k ascending in k
                for (std::size_t k = 2; k <= n; ++k) {
                    double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) /
                                static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            r.nodes[i] = 0.5 * (b - a) * x + 0.5 * (a + b);
            r.weights[i] = (b - a) / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }
};

// Integrates f over the rule's nodes. Deterministic sequential sum so repeated
// runs are byte-identical.
template <class F>
auto integrate(const QuadratureRule& rule, F&& f)
    -> decltype(f(0.0) * 1.0) {
    using R = decltype(f(0.0) * 1.0);
    R acc{};
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        acc += rule.weights[j] * f(rule.nodes[j]);
    return acc;
}

} // namespace layerbeta
