#include "dualgeom/cli/commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "dualgeom/classifiers.hpp"
#include "dualgeom/error.hpp"
#include "dualgeom/frenet.hpp"
#include "dualgeom/line.hpp"
#include "dualgeom/ruled_surface.hpp"

namespace dualgeom::cli {

using nlohmann::json;

namespace {

json to_json(const DualScalar& x) { return {{"real", x.real}, {"dual", x.dual}}; }

json to_json(const DualVec3& v) {
    return {{"real", {v.real.x(), v.real.y(), v.real.z()}},
            {"dual", {v.dual.x(), v.dual.y(), v.dual.z()}}};
}

const char* regime_name(TorsionRegime r) { return r == TorsionRegime::Planar ? "planar" : "regular"; }

json error_json(const Error& e) { return {{"code", to_string(e.code())}, {"message", e.what()}}; }

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Uniform samples over s_range when given, otherwise the classifier's inset sampling.
std::vector<double> frenet_parameters(const DualCurve& curve, const ResolvedSettings& settings,
                                      bool explicit_range) {
    if (!explicit_range) return sample_parameters(curve, settings.samples);
    std::vector<double> s(settings.samples);
    const Interval r = settings.s_range;
    for (int i = 0; i < settings.samples; ++i) {
        s[i] = settings.samples == 1 ? r.lo : r.lo + r.length() * i / (settings.samples - 1);
    }
    return s;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::UnknownBuiltin:
        case ErrorCode::SchemaViolation:
            return kExitInputError;
        case ErrorCode::IOFailure:
            return kExitIOError;
        default:
            return kExitMathError;
    }
}

ResolvedSettings resolve(const CurveSpec& spec, const RunSettings& flags) {
    const RunSettings merged = spec.settings.merged_with(flags);
    ResolvedSettings r;
    if (merged.samples) r.samples = *merged.samples;
    if (r.samples < 1) throw Error(ErrorCode::SchemaViolation, "samples: must be positive");
    if (merged.exact_derivatives) r.exact_derivatives = *merged.exact_derivatives;
    r.tol = merged.tol ? *merged.tol
                       : (r.exact_derivatives ? kExactVerdictTolerance : kFiniteDifferenceVerdictTolerance);
    if (!(r.tol > 0)) throw Error(ErrorCode::SchemaViolation, "tol: must be positive");
    r.s_range = merged.s_range ? *merged.s_range : spec.domain;
    if (!(r.s_range.lo < r.s_range.hi)) throw Error(ErrorCode::SchemaViolation, "s_range: lo must be below hi");
    if (r.s_range.lo < spec.domain.lo || r.s_range.hi > spec.domain.hi) {
        throw Error(ErrorCode::SchemaViolation, "s_range: must lie inside the curve domain");
    }
    if (merged.u_range) r.u_range = *merged.u_range;
    if (!(r.u_range.lo < r.u_range.hi)) throw Error(ErrorCode::SchemaViolation, "u_range: lo must be below hi");
    if (merged.grid) std::tie(r.grid_s, r.grid_u) = *merged.grid;
    if (r.grid_s < 2 || r.grid_u < 2) throw Error(ErrorCode::SchemaViolation, "grid: need at least 2x2");
    if (merged.format) r.format = *merged.format;
    if (r.format != "obj" && r.format != "csv") {
        throw Error(ErrorCode::SchemaViolation, "format: expected obj or csv, got '" + r.format + "'");
    }
    if (merged.out) r.out = *merged.out;
    return r;
}

json cmd_classify(const CurveSpec& spec, const ResolvedSettings& settings) {
    const DualCurve curve = make_curve(spec, settings.exact_derivatives);
    const int n = settings.samples;
    const double tol = settings.tol;

    json report;
    report["version"] = kToolVersion;
    report["curve"] = {{"name", curve.name()},
                       {"kind", spec.kind == CurveKind::Builtin ? "builtin" : "series"},
                       {"domain", {spec.domain.lo, spec.domain.hi}},
                       {"exact_derivatives", settings.exact_derivatives},
                       {"samples", n}};
    report["tolerances"] = {{"verdict", tol},
                            {"condition_threshold", kConditionThreshold},
                            {"curvature_threshold", kCurvatureThreshold},
                            {"torsion_threshold", kTorsionThreshold},
                            {"radius_constraint", 1e-6}};

    const NormalCurveTest normal = normal_curve_test(curve, n, tol);
    report["normal_test"] = {{"is_normal", normal.is_normal},
                             {"residual_real", normal.residual_real},
                             {"residual_dual", normal.residual_dual},
                             {"worst_s", normal.worst_s}};

    const SphereFit sphere = spherical_test(curve, n, tol);
    report["sphere_fit"] = {{"is_spherical", sphere.is_spherical},
                            {"centered_at_origin", sphere.centered_at_origin},
                            {"center", to_json(sphere.center)},
                            {"radius", to_json(sphere.radius)},
                            {"center_drift", sphere.center_drift},
                            {"radius_drift", sphere.radius_drift},
                            {"regime", regime_name(sphere.regime)}};

    const double moment = normal_moment_residual(curve, n);
    report["moment_residual"] = {{"residual", moment}, {"within_tol", moment < tol}};

    std::optional<NormalFit> fit;
    try {
        FitOptions options;
        options.n_samples = n;
        options.tol = tol;
        fit = fit_curvature_solution(curve, options);
        report["normal_fit"] = {{"c1", to_json(fit->c1)},
                                {"c2", to_json(fit->c2)},
                                {"residual_rms_real", fit->residual_rms_real},
                                {"residual_rms_dual", fit->residual_rms_dual},
                                {"condition", fit->condition},
                                {"is_normal", fit->is_normal},
                                {"regime", regime_name(fit->regime)}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::IllConditionedFit) throw;
        report["normal_fit"] = {{"error", error_json(e)}};
    }

    if (!fit) {
        report["radius_constraint"] = {{"error", {{"code", "Skipped"}, {"message", "no coefficient fit"}}}};
    } else {
        try {
            const RadiusConsistency rc = radius_constraint(*fit, sphere);
            report["radius_constraint"] = {{"consistent", rc.consistent},
                                           {"sign", rc.sign},
                                           {"root", to_json(rc.root)},
                                           {"coefficient_mismatch", rc.coefficient_mismatch},
                                           {"chain_discrepancy", rc.chain_discrepancy}};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InconsistentFits && e.code() != ErrorCode::NonPositiveRealPart) throw;
            report["radius_constraint"] = {{"consistent", false}, {"error", error_json(e)}};
        }
    }
    return report;
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

void cmd_frenet(const CurveSpec& spec, const ResolvedSettings& settings, std::ostream& out) {
    const DualCurve curve = make_curve(spec, settings.exact_derivatives);
    const bool explicit_range = settings.s_range.lo != spec.domain.lo ||
                                settings.s_range.hi != spec.domain.hi;
    const std::vector<double> params = frenet_parameters(curve, settings, explicit_range);

    std::ostringstream buf;
    buf << "s";
    for (const char* part : {"", "_dual"}) {
        for (const char* frame : {"T", "N", "B"}) {
            for (const char* axis : {"x", "y", "z"}) buf << ',' << frame << '_' << axis << part;
        }
    }
    buf << ",k1,k1_dual,k2,k2_dual\n";

    for (double s : params) {
        FrenetSample f;
        try {
            f = frenet_apparatus(curve, s);
        } catch (const Error& e) {
            throw Error(e.code(), "at s=" + format_number(s) + ": " + e.what());
        }
        buf << format_number(s);
        for (int part = 0; part < 2; ++part) {
            for (const DualVec3* v : {&f.T, &f.N, &f.B}) {
                const Vec3& c = part == 0 ? v->real : v->dual;
                for (int i = 0; i < 3; ++i) buf << ',' << format_number(c[i]);
            }
        }
        buf << ',' << format_number(f.k1.real) << ',' << format_number(f.k1.dual) << ','
            << format_number(f.k2.real) << ',' << format_number(f.k2.dual) << '\n';
    }
    out << buf.str();
}

void cmd_study_map(const CurveSpec& spec, const ResolvedSettings& settings, std::ostream& out) {
    const DualCurve curve = make_curve(spec, settings.exact_derivatives);
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(curve, settings.grid_s, settings.u_range,
                                                                settings.grid_u, settings.s_range);
    std::ostringstream buf;
    if (settings.format == "csv") {
        export_csv(mesh, buf);
    } else {
        export_obj(mesh, buf);
    }
    out << buf.str();
}

}  // namespace dualgeom::cli
