#pragma once

// Deterministic pseudo-random shapes used by the verification harness and the
// test suites: smooth generic curves with no special symmetry, so identities
// that hold on them are not artifacts of roundness.

#include <random>
#include <vector>

#include "layerbeta/errors.hpp"
#include "layerbeta/plane_curve.hpp"

namespace layerbeta {

// A smooth closed curve: a circle of radius ~1 plus decaying random Fourier
// modes, small enough to keep the curve regular (construction re-draws in the
// rare case the perturbation pinches the speed). Deterministic in the seed
// on a given platform.
inline PlaneCurve random_fourier_curve(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<PlaneCurve::Mode> modes;
        modes.push_back({0, 0.3 * unit(rng), 0.0, 0.3 * unit(rng), 0.0});
        modes.push_back({1, 1.0 + 0.1 * unit(rng), 0.05 * unit(rng),
                         0.05 * unit(rng), 1.0 + 0.1 * unit(rng)});
        for (int k = 2; k <= 5; ++k) {
            double decay = 0.35 / (k * k * k);
            modes.push_back({k, decay * unit(rng), decay * unit(rng),
                             decay * unit(rng), decay * unit(rng)});
        }
        try {
            return PlaneCurve(std::move(modes));
        } catch (const SingularCurveError&) {
            continue; // extremely unlikely with these amplitudes
        }
    }
    throw SingularCurveError("random curve generation kept failing");
}

} // namespace layerbeta
