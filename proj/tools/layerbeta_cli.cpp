// Command-line driver: beta-function scans (CSV), residue reports (JSON),
// and the verification harness (JSON).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical domain error during evaluation.

#include <CLI11.hpp>

#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "layerbeta/errors.hpp"
#include "layerbeta/frontend.hpp"
#include "layerbeta/shapes.hpp"
#include "layerbeta/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// "from:to:step", or a single value meaning a one-point grid.
bool parse_s_range(const std::string& text, layerbeta::ScanRequest& request) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t colon = text.find(':', pos);
        const std::string token =
            text.substr(pos, colon == std::string::npos ? std::string::npos
                                                        : colon - pos);
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty()) return false;
        parts.push_back(value);
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() == 1) {
        request.s_from = request.s_to = parts[0];
        request.s_step = 1.0;
        return true;
    }
    if (parts.size() == 3) {
        request.s_from = parts[0];
        request.s_to = parts[1];
        request.s_step = parts[2];
        return true;
    }
    return false;
}

int cmd_scan(const std::string& shape_text, const std::string& layer_text,
             const std::string& s_text, double s_imag, std::size_t nodes) {
    std::optional<layerbeta::ShapeArg> shape;
    layerbeta::ScanRequest request;
    try {
        if (!parse_s_range(s_text, request))
            throw layerbeta::DomainError(
                "--s must be from:to:step or a single value, got '" + s_text +
                "'");
        layerbeta::scan_grid(request.s_from, request.s_to, request.s_step);
        if (nodes < 2)
            throw layerbeta::DomainError("--nodes must be at least 2");
        request.s_imag = s_imag;
        request.nodes = nodes;
        request.layer = (layer_text == "single")
                            ? layerbeta::LayerKind::single_layer
                            : layerbeta::LayerKind::double_layer;
        shape = layerbeta::parse_shape(shape_text);
    } catch (const layerbeta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        layerbeta::run_scan(*shape, request, std::cout);
    } catch (const layerbeta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}

int cmd_residues(const std::string& shape_text, std::size_t nodes,
                 bool with_extrapolation) {
    std::optional<layerbeta::ShapeArg> shape;
    try {
        if (nodes < 2)
            throw layerbeta::DomainError("--nodes must be at least 2");
        shape = layerbeta::parse_shape(shape_text);
    } catch (const layerbeta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        layerbeta::emit_residue_json(
            layerbeta::shape_residue_report(*shape, nodes, with_extrapolation),
            std::cout);
    } catch (const layerbeta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}

int cmd_verify(const std::string& level_text) {
    const layerbeta::VerifyLevel level = (level_text == "fast")
                                             ? layerbeta::VerifyLevel::fast
                                             : layerbeta::VerifyLevel::full;
    const layerbeta::VerifyReport report = layerbeta::run_verification(level);
    layerbeta::emit_verify_json(report, std::cout);
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Beta functions of single and double layers on closed plane curves "
        "and closed surfaces"};
    app.require_subcommand(1);

    const std::string shape_help =
        "Shape as name:params — circle:R, ellipse:a,b, fourier:path, "
        "sphere:R, ellipsoid:a,b,c, torus:R,r (curve files: one 'k p q r w' "
        "Fourier mode per line, '#' comments)";

    std::string scan_shape, scan_layer = "double", scan_s = "3:3:1";
    double scan_s_imag = 0.0;
    std::size_t scan_nodes = 512;
    CLI::App* scan = app.add_subcommand(
        "scan", "Evaluate the beta function over an s grid; CSV on stdout");
    scan->add_option("--shape", scan_shape, shape_help)->required();
    scan->add_option("--layer", scan_layer, "Layer kernel: single or double")
        ->check(CLI::IsMember({"single", "double"}));
    scan->add_option("--s", scan_s,
                     "Real s grid as from:to:step, or a single value");
    scan->add_option("--s-imag", scan_s_imag,
                     "Imaginary part added to every sample");
    scan->add_option(
        "--nodes", scan_nodes,
        "Quadrature resolution (curves: n nodes; surfaces: n x 2n grid)");

    std::string residues_shape;
    std::size_t residues_nodes = 256;
    bool with_extrapolation = false;
    CLI::App* residues = app.add_subcommand(
        "residues",
        "Residues at all covered poles by independent routes; JSON on stdout");
    residues->add_option("--shape", residues_shape, shape_help)->required();
    residues->add_option(
        "--nodes", residues_nodes,
        "Quadrature resolution (curves: n nodes; surfaces: n x 2n grid)");
    residues->add_flag(
        "--with-extrapolation", with_extrapolation,
        "Also extrapolate (s - s0) B(s) toward each reachable pole");

    std::string verify_level = "full";
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the acceptance checks; JSON report on stdout");
    verify->add_option("--level", verify_level,
                       "fast (capped node counts) or full")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or a one-line diagnostic
        return code == 0 ? 0 : kExitUsage;
    }

    if (scan->parsed())
        return cmd_scan(scan_shape, scan_layer, scan_s, scan_s_imag,
                        scan_nodes);
    if (residues->parsed())
        return cmd_residues(residues_shape, residues_nodes,
                            with_extrapolation);
    return cmd_verify(verify_level);
}
