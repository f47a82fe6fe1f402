// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dualgeom/classifiers.hpp"
#include "dualgeom/curves.hpp"
#include "dualgeom/error.hpp"
#include "dualgeom/frenet.hpp"
#include "dualgeom/line.hpp"
#include "dualgeom/ruled_surface.hpp"

using namespace dualgeom;

namespace {

std::mt19937_64 rng(7);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    failures += !pass;
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

SeriesDefinition random_series() {
    SeriesDefinition series;
    for (int i = 0; i < 3; ++i) {
        auto& r = series.real[i];
        r.poly = {uniform(-1, 1) + (i == 0 ? 2.0 : 0.0), uniform(-0.5, 0.5), uniform(-0.3, 0.3)};
        r.trig = {{uniform(-1, 1), uniform(-1, 1), uniform(1.0, 2.5)}};
        auto& d = series.dual[i];
        d.poly = {uniform(-1, 1), uniform(-0.5, 0.5)};
        d.trig = {{uniform(-0.5, 0.5), uniform(-0.5, 0.5), uniform(0.5, 2.0)}};
    }
    return series;
}

// Anisotropic scale in a random orthonormal frame.
Eigen::Matrix3d anisotropic_map() {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(i, j) = uniform(-1, 1);
    }
    const Eigen::Matrix3d q = Eigen::HouseholderQR<Eigen::Matrix3d>(m).householderQ();
    const Eigen::Vector3d scales(uniform(0.5, 0.8), uniform(0.9, 1.1), uniform(1.3, 1.8));
    return q * scales.asDiagonal() * q.transpose();
}

void helicoid() {
    const auto start = std::chrono::steady_clock::now();
    const RuledSurfaceMesh mesh = ruled_surface_from_dual_curve(study_circle(), 64, {-2, 2}, 16, Interval{0, 2 * M_PI});
    std::ostringstream sink;
    export_obj(mesh, sink);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double worst = 0;
    for (std::size_t i = 0; i < mesh.s_count(); ++i) {
        for (std::size_t j = 0; j < mesh.u_count(); ++j) {
            const double s = mesh.s_values[i], u = mesh.u_values[j];
            worst = std::max(worst, (mesh.vertex(i, j) - Vec3(u * std::cos(s), u * std::sin(s), s)).norm());
        }
    }
    const bool ok = mesh.vertices.size() == 1024 && worst < 1e-8 && seconds < 1.0;
    report(1, ok, fmt("helicoid 64x16: max vertex error %.3g, %.3g s", worst, seconds));
}

void unit_sphere_membership() {
    const SphereFit fit = spherical_test(study_circle(), kDefaultSamples, kExactVerdictTolerance);
    const double radius_err = max_abs(fit.radius - DualScalar(1.0, 0.0));
    const double center_err = max_abs(fit.center);
    const bool ok = fit.is_spherical && radius_err < 1e-8 && center_err < 1e-8;
    report(2, ok, fmt("radius - (1+e0) = %.3g, |center| = %.3g", radius_err, center_err));
}

struct SuiteResult {
    int agree = 0;
    int total = 0;
    double worst_positive = 0;
    double weakest_negative = INFINITY;
    double worst_eq9 = 0;
};

void equivalence_suite() {
    SuiteResult r;
    const Interval domain{0.0, 1.0};
    const int n = kDefaultSamples;
    const double tol = kExactVerdictTolerance;
    int redrawn = 0;
    for (int k = 0; k < 50; ++k) {
        const bool positive = k % 2 == 0;
        const SeriesDefinition series = random_series();
        const DualVec3 offset{Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)),
                              Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1))};
        const DualCurve curve = positive ? normalized_series_curve(series, domain)
                                         : affine_image(series, true, anisotropic_map(), offset, domain, "control");
        // The characterizations need k1 > 0 and k2 != 0 throughout; draws that break
        // this are replaced.
        try {
            fit_curvature_solution(curve, {n, tol, std::nullopt, {}});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::VanishingTorsion && e.code() != ErrorCode::VanishingCurvature) throw;
            ++redrawn;
            --k;
            continue;
        }
        ++r.total;
        try {
            const NormalCurveTest normal = normal_curve_test(curve, n, tol);
            const SphereFit sphere = spherical_test(curve, n, tol);
            r.agree += normal.is_normal == sphere.is_spherical && normal.is_normal == positive;
            const double sphere_residual = std::max(sphere.center_drift, sphere.radius_drift);
            if (std::getenv("ACCEPTANCE_VERBOSE")) {
                std::printf("  curve %d %s: normal %.3g at s=%.4g, centre drift %.3g, radius drift %.3g\n", k,
                            positive ? "positive" : "control", normal.residual(), normal.worst_s,
                            sphere.center_drift, sphere.radius_drift);
            }
            if (positive) {
                r.worst_positive = std::max({r.worst_positive, normal.residual(), sphere_residual});
                const NormalFit fit = fit_curvature_solution(curve, {n, tol, std::nullopt, {}});
                const DualScalar sum = fit.c1 * fit.c1 + fit.c2 * fit.c2;
                for (const FitSample& s : fit.samples) {
                    const DualVec3 p = curve.position(s.s);
                    r.worst_eq9 = std::max(r.worst_eq9, max_abs(sum - dot(p, p)));
                }
                if (!fit.is_normal) r.worst_eq9 = INFINITY;
            } else {
                r.weakest_negative = std::min({r.weakest_negative, normal.residual(), sphere_residual});
            }
        } catch (const Error& e) {
            std::printf("  curve %d: %s\n", k, e.what());
        }
    }
    const bool ok3 = r.agree == r.total && r.total >= 50 && r.worst_positive < 1e-6 && r.weakest_negative > 1e-2;
    char line[256];
    std::snprintf(line, sizeof line,
                  "%d/%d agree (%d draws with vanishing torsion replaced); worst positive residual %.3g, "
                  "weakest negative %.3g",
                  r.agree, r.total, redrawn, r.worst_positive, r.weakest_negative);
    report(3, ok3, line);
    report(4, r.worst_eq9 < 1e-6, fmt("max |c1^2 + c2^2 - g(a,a)| over positives %.3g", r.worst_eq9));
}

void coefficient_round_trip() {
    FitOptions at_equator;
    at_equator.anchor = 0.0;
    double worst = 0;
    for (bool exact : {true, false}) {
        DualCurve lox = dual_loxodrome(2.0, 0.5);
        if (!exact) lox = lox.finite_difference_only();
        const NormalFit fit = fit_curvature_solution(lox, at_equator);
        worst = std::max({worst, max_abs(fit.c1 - DualScalar(1.0, 0.0)), max_abs(fit.c2)});
    }
    report(5, worst < 1e-6, fmt("dual loxodrome (c1, c2) = (1+e0, 0+e0) recovered to %.3g", worst));
}

void frenet_validity() {
    SeriesDefinition series = random_series();
    const std::vector<DualCurve> curves = {study_circle(), real_helix(1.0, 0.5), great_circle(),
                                           dual_loxodrome(2.0, 0.5), normalized_series_curve(series, {0.0, 2.0})};
    double exact_worst = 0, fd_worst = 0, fd_vs_exact = 0;
    for (const DualCurve& c : curves) {
        const DualCurve fd = c.finite_difference_only();
        for (double s : sample_parameters(c, kDefaultSamples)) {
            const FrenetSample e = frenet_apparatus(c, s);
            const FrenetSample f = frenet_apparatus(fd, s);
            const FrenetResiduals re = frenet_residuals(e), rf = frenet_residuals(f);
            exact_worst = std::max({exact_worst, re.ode, re.orthonormality});
            fd_worst = std::max({fd_worst, rf.ode, rf.orthonormality});
            fd_vs_exact = std::max({fd_vs_exact, max_abs(e.T - f.T), max_abs(e.N - f.N), max_abs(e.B - f.B),
                                    max_abs(e.k1 - f.k1), max_abs(e.k2 - f.k2)});
        }
    }
    const bool ok = exact_worst < 1e-9 && fd_worst < 1e-6 && fd_vs_exact < 1e-6;
    report(6, ok, fmt("exact %.3g, finite-difference %.3g, fd-vs-exact frame %.3g", exact_worst, fd_worst,
                      fd_vs_exact));
}

double rel_gap(const DualScalar& a, const DualScalar& b) {
    const auto one = [](double x, double y) {
        return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
    };
    return std::max(one(a.real, b.real), one(a.dual, b.dual));
}

void algebra_suite() {
    double worst = 0;
    bool nilpotent = true;
    for (int i = 0; i < 10000; ++i) {
        const DualScalar a{uniform(-10, 10), uniform(-10, 10)}, b{uniform(-10, 10), uniform(-10, 10)},
            c{uniform(-10, 10), uniform(-10, 10)};
        worst = std::max({worst, rel_gap(a + b, b + a), rel_gap(a * b, b * a), rel_gap((a + b) + c, a + (b + c)),
                          rel_gap((a * b) * c, a * (b * c)), rel_gap(a * (b + c), a * b + a * c)});
        const DualScalar e = DualScalar(0, a.dual) * DualScalar(0, b.dual);
        nilpotent = nilpotent && e.real == 0.0 && e.dual == 0.0;
    }
    // Lift against central differences: the gap must shrink by ~4 per halving of h.
    const auto f = [](double x) { return std::exp(std::sin(x)); };
    const auto fp = [](double x) { return std::cos(x) * std::exp(std::sin(x)); };
    bool second_order = true;
    double worst_ratio = INFINITY;
    for (int i = 0; i < 20; ++i) {
        const double x = uniform(-3, 3);
        const double lifted = lift(f, fp, DualScalar(x, 1.0)).dual;
        const double h = 1e-2;
        const double e1 = std::abs(lifted - (f(x + h) - f(x - h)) / (2 * h));
        const double e2 = std::abs(lifted - (f(x + h / 2) - f(x - h / 2)) / h);
        if (e1 < 1e-12) continue;  // f''' vanishes near x
        worst_ratio = std::min(worst_ratio, e1 / e2);
        second_order = second_order && e1 < 10 * h * h && std::abs(e1 / e2 - 4) < 0.2;
    }
    const bool ok = worst < 1e-12 && nilpotent && second_order;
    char line[256];
    std::snprintf(line, sizeof line, "ring axioms max rel gap %.3g; eps^2 = 0 %s; lift error ratio per halving >= %.3g",
                  worst, nilpotent ? "exact" : "broken", worst_ratio);
    report(7, ok, line);
}

void study_round_trip() {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const Vec3 p(uniform(-5, 5), uniform(-5, 5), uniform(-5, 5));
        const Vec3 d = Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)).normalized();
        const Line back = dual_to_line(line_to_dual({p, d}));
        const Vec3 foot = p - p.dot(d) * d;
        worst = std::max({worst, (back.direction - d).norm(), (back.point - foot).norm()});
    }
    const DualAngle a = dual_angle({Vec3(0, 0, 1), Vec3::Zero()}, line_to_dual({Vec3(2, 0, 0), Vec3(0, 1, 0)}));
    // Direct oracle: angle between the directions and distance along their common normal.
    const Vec3 u(0, 0, 1), v(0, 1, 0), q(2, 0, 0);
    const double angle = std::acos(u.dot(v));
    const double distance = std::abs(q.dot(u.cross(v))) / u.cross(v).norm();
    const double angle_err = std::abs(a.angle.real - angle);
    const double distance_err = std::abs(a.distance - distance);
    const bool ok = worst < 1e-12 && angle_err < 1e-10 && distance_err < 1e-10 &&
                    std::abs(angle - M_PI / 2) < 1e-15 && distance == 2.0;
    report(8, ok, fmt("100 lines round trip %.3g; dual angle error %.3g, distance error %.3g", worst, angle_err,
                      distance_err));
}

}  // namespace

int main() {
    const std::vector<void (*)()> criteria = {helicoid, unit_sphere_membership, equivalence_suite,
                                              coefficient_round_trip, frenet_validity, algebra_suite,
                                              study_round_trip};
    for (auto run : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            std::printf("unexpected error: %s\n", e.what());
            ++failures;
        }
    }
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}
