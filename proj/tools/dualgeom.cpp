// Command-line front end over a JSON curve config.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dualgeom/cli/commands.hpp"
#include "dualgeom/error.hpp"

namespace {

using namespace dualgeom;
using namespace dualgeom::cli;

Interval parse_range(const std::string& text, const char* flag) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument(text);
        std::size_t used = 0;
        const double lo = std::stod(text.substr(0, comma), &used);
        const std::string rest = text.substr(comma + 1);
        const double hi = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw Error(ErrorCode::SchemaViolation, std::string(flag) + ": expected LO,HI, got '" + text + "'");
    }
}

struct Flags {
    std::string config;
    std::optional<int> samples;
    std::optional<double> tol;
    bool exact = false;
    std::string s_range, u_range, grid, format, out;

    RunSettings to_settings() const {
        RunSettings s;
        s.samples = samples;
        s.tol = tol;
        if (exact) s.exact_derivatives = true;
        if (!s_range.empty()) s.s_range = parse_range(s_range, "--s-range");
        if (!u_range.empty()) s.u_range = parse_range(u_range, "--u-range");
        if (!grid.empty()) s.grid = parse_grid(grid);
        if (!format.empty()) s.format = format;
        if (!out.empty()) s.out = out;
        return s;
    }
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("config", f.config, "JSON curve definition")->required();
    cmd->add_option("--samples", f.samples, "sample count");
    cmd->add_option("--tol", f.tol, "verdict tolerance");
    cmd->add_flag("--exact-derivatives", f.exact, "use exact derivative evaluators");
    cmd->add_option("--s-range", f.s_range, "parameter range LO,HI");
    cmd->add_option("--out", f.out, "output file (default stdout)");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw Error(ErrorCode::IOFailure, "cannot write to stdout");
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::IOFailure, "cannot open " + path + " for writing");
    file << text;
    if (!file.flush()) throw Error(ErrorCode::IOFailure, "write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual curve geometry: Frenet apparatus, normal/spherical classification, Study map"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Flags flags;
    auto* classify = app.add_subcommand("classify", "run every classifier and print the report");
    auto* frenet = app.add_subcommand("frenet", "print the dual Frenet apparatus as CSV");
    auto* study = app.add_subcommand("study-map", "emit the ruled surface of the Study image");
    for (auto* cmd : {classify, frenet, study}) add_common(cmd, flags);
    study->add_option("--u-range", flags.u_range, "ruling parameter range LO,HI");
    study->add_option("--grid", flags.grid, "grid size SxU");
    study->add_option("--format", flags.format, "obj or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        const CurveSpec spec = load_curve_spec(flags.config);
        const ResolvedSettings settings = resolve(spec, flags.to_settings());
        std::ostringstream text;
        if (classify->parsed()) {
            text << serialize_report(cmd_classify(spec, settings));
        } else if (frenet->parsed()) {
            cmd_frenet(spec, settings, text);
        } else {
            cmd_study_map(spec, settings, text);
        }
        emit(text.str(), settings.out);
    } catch (const Error& e) {
        std::cerr << "dualgeom: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kExitOk;
}
