#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dualgeom/cli/curve_spec.hpp"
#include "dualgeom/error.hpp"

namespace dualgeom::cli {

inline constexpr const char* kToolVersion = "dualgeom 1.0.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitMathError = 3,
    kExitIOError = 4,
};

/// Exit status for a library error code.
int exit_code_for(ErrorCode code);

/// Fully resolved settings with defaults applied.
struct ResolvedSettings {
    int samples = 256;
    double tol = 0.0;
    bool exact_derivatives = false;
    Interval s_range;
    Interval u_range{-2.0, 2.0};
    int grid_s = 64;
    int grid_u = 16;
    std::string format = "obj";
    std::string out;  // empty: stdout
};

ResolvedSettings resolve(const CurveSpec& spec, const RunSettings& flags);

/// Runs every classifier and returns the report. Errors that only show that a curve is not
/// normal (inconsistent radius fit) are recorded in the report; precondition failures throw.
nlohmann::json cmd_classify(const CurveSpec& spec, const ResolvedSettings& settings);

/// Serialized report: sorted keys, two-space indentation, trailing newline.
std::string serialize_report(const nlohmann::json& report);

/// One CSV row of Frenet data per sample: s, T, N, B (real then dual parts), k1, k1*, k2, k2*.
void cmd_frenet(const CurveSpec& spec, const ResolvedSettings& settings, std::ostream& out);

/// Ruled surface of the curve's E. Study image in OBJ or CSV form.
void cmd_study_map(const CurveSpec& spec, const ResolvedSettings& settings, std::ostream& out);

}  // namespace dualgeom::cli
