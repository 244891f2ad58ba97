#pragma once

// Deterministic random test shapes shared by the unit and acceptance suites.
// The generator itself lives in the library so the verification harness can
// use the identical curves.

#include "layerbeta/random_shapes.hpp"

namespace layerbeta_testing {

using layerbeta::random_fourier_curve;

} // namespace layerbeta_testing
