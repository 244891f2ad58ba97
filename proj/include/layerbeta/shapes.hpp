#pragma once

// Shape arguments in the "name:params" grammar used by the command line:
//
//   circle:R          ellipse:a,b        fourier:path
//   sphere:R          ellipsoid:a,b,c    torus:R,r
//
// Parameters are positional and comma-separated; `fourier` takes the path of
// a curve file instead (the whole remainder of the argument, so paths may
// contain commas or further colons).

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "layerbeta/errors.hpp"
#include "layerbeta/param_surface.hpp"
#include "layerbeta/plane_curve.hpp"

namespace layerbeta {

struct ShapeArg {
    std::string text; // the argument as given
    std::variant<PlaneCurve, ParamSurface> shape;

    bool is_curve() const { return std::holds_alternative<PlaneCurve>(shape); }
    const PlaneCurve& curve() const { return std::get<PlaneCurve>(shape); }
    const ParamSurface& surface() const {
        return std::get<ParamSurface>(shape);
    }
};

namespace detail {

inline std::vector<double> shape_params(const std::string& name,
                                        const std::string& body,
                                        std::size_t count) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = body.find(',', pos);
        const std::string token =
            body.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty())
            throw DomainError("shape " + name + ": bad numeric parameter '" +
                              token + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != count)
        throw DomainError("shape " + name + ": expected " +
                          std::to_string(count) + " parameter(s), got " +
                          std::to_string(out.size()));
    return out;
}

} // namespace detail

inline ShapeArg parse_shape(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw DomainError(
            "shape argument must look like name:params (e.g. circle:1), "
            "got '" +
            text + "'");
    const std::string name = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);

    if (name == "circle") {
        const auto p = detail::shape_params(name, body, 1);
        return {text, PlaneCurve::circle(p[0])};
    }
    if (name == "ellipse") {
        const auto p = detail::shape_params(name, body, 2);
        return {text, PlaneCurve::ellipse(p[0], p[1])};
    }
    if (name == "fourier") {
        return {text, PlaneCurve::from_file(body)};
    }
    if (name == "sphere") {
        const auto p = detail::shape_params(name, body, 1);
        return {text, ParamSurface::sphere(p[0])};
    }
    if (name == "ellipsoid") {
        const auto p = detail::shape_params(name, body, 3);
        return {text, ParamSurface::ellipsoid(p[0], p[1], p[2])};
    }
    if (name == "torus") {
        const auto p = detail::shape_params(name, body, 2);
        return {text, ParamSurface::torus(p[0], p[1])};
    }
    throw DomainError("unknown shape '" + name +
                      "' (expected circle, ellipse, fourier, sphere, "
                      "ellipsoid, or torus)");
}

} // namespace layerbeta
