#pragma once

#include <stdexcept>
#include <string>

namespace layerbeta {

// Base class so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside a function's stated domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at (or within guard distance of) a pole.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Curve parametrization fails to be regular (vanishing speed).
struct SingularCurveError : Error {
    explicit SingularCurveError(const std::string& msg) : Error(msg) {}
};

// Surface chart degenerates (vanishing area element) at the requested point.
struct DegenerateChartError : Error {
    explicit DegenerateChartError(const std::string& msg) : Error(msg) {}
};

// Kernel evaluation requested at coincident points.
struct CoincidentPointsError : Error {
    explicit CoincidentPointsError(const std::string& msg) : Error(msg) {}
};

// Beta quadrature requested outside the convergence half-plane.
struct ConvergenceRegionError : Error {
    explicit ConvergenceRegionError(const std::string& msg) : Error(msg) {}
};

// Extrapolation failed to settle within the requested budget.
struct NonConvergenceError : Error {
    explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

} // namespace layerbeta
