#pragma once

// Command-front plumbing shared by the CLI binary and its tests: scan grids,
// CSV emission for beta scans, and JSON emission for residue reports and
// verification reports.  All numbers print with 17 significant digits and
// objects keep a fixed key order, so output is byte-stable for fixed
// arguments on a given platform.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "layerbeta/beta_engine.hpp"
#include "layerbeta/errors.hpp"
#include "layerbeta/quadrature.hpp"
#include "layerbeta/residues.hpp"
#include "layerbeta/shapes.hpp"
#include "layerbeta/verify.hpp"

namespace layerbeta {

enum class LayerKind { single_layer, double_layer };

struct ScanRequest {
    LayerKind layer = LayerKind::double_layer;
    double s_from = 3.0;
    double s_to = 3.0;
    double s_step = 1.0;
    double s_imag = 0.0;
    // Curves use `nodes` points; surfaces use a (nodes x 2*nodes) grid.
    std::size_t nodes = 512;
};

inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// The sample points s_from, s_from + s_step, ..., up to s_to inclusive
// (with a half-step tolerance against rounding at the top end).
inline std::vector<double> scan_grid(double from, double to, double step) {
    if (!(step > 0.0)) throw DomainError("scan: s step must be positive");
    if (to < from) throw DomainError("scan: empty s range");
    std::vector<double> out;
    const double span = (to - from) / step;
    const std::size_t count =
        static_cast<std::size_t>(std::floor(span + 0.5 * 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(from + static_cast<double>(i) * step);
    return out;
}

inline BetaSample evaluate_beta(const ShapeArg& shape, LayerKind layer,
                                Complex s, std::size_t nodes) {
    if (shape.is_curve()) {
        return layer == LayerKind::double_layer
                   ? beta_double_layer(shape.curve(), s, nodes)
                   : beta_single_layer(shape.curve(), s, nodes);
    }
    return layer == LayerKind::double_layer
               ? beta_double_layer(shape.surface(), s, nodes, 2 * nodes)
               : beta_single_layer(shape.surface(), s, nodes, 2 * nodes);
}

inline void run_scan(const ShapeArg& shape, const ScanRequest& request,
                     std::ostream& out) {
    out << "s_re,s_im,beta_re,beta_im,nodes,err_est\n";
    for (double s_re : scan_grid(request.s_from, request.s_to,
                                 request.s_step)) {
        const BetaSample sample = evaluate_beta(
            shape, request.layer, Complex(s_re, request.s_imag),
            request.nodes);
        out << format_number(s_re) << ',' << format_number(request.s_imag)
            << ',' << format_number(sample.value.real()) << ','
            << format_number(sample.value.imag()) << ',' << sample.node_count
            << ',' << format_number(sample.error_estimate) << '\n';
    }
}

inline std::vector<ResidueReport> shape_residue_report(
    const ShapeArg& shape, std::size_t nodes, bool with_extrapolation) {
    ResidueReportOptions options;
    options.with_extrapolation = with_extrapolation;
    if (shape.is_curve()) {
        constexpr double two_pi = 6.28318530717958647692;
        return residue_report(
            shape.curve(), QuadratureRule::periodic_trapezoid(nodes, two_pi),
            options);
    }
    return residue_report(shape.surface(), nodes, 2 * nodes, options);
}

namespace detail {

inline std::string json_optional(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("null");
}

} // namespace detail

inline void emit_residue_json(const std::vector<ResidueReport>& entries,
                              std::ostream& out) {
    out << "[\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const ResidueReport& r = entries[i];
        out << "  {\"pole\": " << format_number(r.pole)
            << ", \"route_invariant\": " << format_number(r.route_invariant)
            << ", \"route_jet\": " << format_number(r.route_jet)
            << ", \"closed_form\": " << detail::json_optional(r.closed_form)
            << ", \"extrapolated\": " << detail::json_optional(r.extrapolated)
            << ", \"max_pairwise_gap\": " << format_number(r.max_pairwise_gap)
            << '}' << (i + 1 < entries.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

inline void emit_verify_json(const VerifyReport& report, std::ostream& out) {
    out << "{\n  \"level\": \""
        << (report.level == VerifyLevel::fast ? "fast" : "full")
        << "\",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const VerifyCheck& c = report.checks[i];
        out << "    {\"criterion\": \"" << c.criterion << "\", \"name\": \""
            << c.name << "\", \"expected\": " << format_number(c.expected)
            << ", \"actual\": " << format_number(c.actual)
            << ", \"tolerance\": " << format_number(c.tolerance)
            << ", \"pass\": " << (c.pass ? "true" : "false") << '}'
            << (i + 1 < report.checks.size() ? "," : "") << '\n';
    }
    out << "  ],\n  \"pass\": " << (report.pass ? "true" : "false")
        << "\n}\n";
}

} // namespace layerbeta
