#pragma once

#include <vector>

#include <Eigen/Core>

#include "dualgeom/curve.hpp"

namespace dualgeom {

/// (cos t - εt sin t, sin t + εt cos t, 0): lies on the dual unit sphere and maps to the
/// helicoid (u cos t, u sin t, t).
DualCurve study_circle(Interval domain = {0.0, 2 * M_PI});

/// Unit-speed circular helix (a cos(t/c), a sin(t/c), bt/c), c = √(a²+b²), zero dual part.
DualCurve real_helix(double a, double b, Interval domain = {0.0, 2 * M_PI});

/// Unit circle in the xy-plane with zero dual part.
DualCurve great_circle(Interval domain = {0.0, 2 * M_PI});

/// Loxodrome (sech u cos(k̄u), sech u sin(k̄u), tanh u) with a dual winding rate
/// k̄ = k + εk*. It lies on the dual unit sphere and crosses the equator at u = 0 with
/// curvature exactly 1+ε0.
DualCurve dual_loxodrome(double k, double k_dual, Interval domain = {-1.0, 1.0});

/// One coordinate of a series curve: Σ poly[i] tⁱ + Σ (a cos ωt + b sin ωt).
struct SeriesCoordinate {
    struct Trig {
        double a = 0.0;
        double b = 0.0;
        double omega = 0.0;
    };
    std::vector<double> poly;
    std::vector<Trig> trig;

    template <class S>
    S evaluate(const S& t) const {
        S sum(0.0);
        S power(1.0);
        for (double c : poly) {
            sum = sum + S(c) * power;
            power = power * t;
        }
        for (const Trig& term : trig) {
            const S phase = S(term.omega) * t;
            sum = sum + S(term.a) * cos(phase) + S(term.b) * sin(phase);
        }
        return sum;
    }
};

struct SeriesDefinition {
    std::array<SeriesCoordinate, 3> real;
    std::array<SeriesCoordinate, 3> dual;

    template <class S>
    Triple<S> operator()(const S& t) const {
        const S eps(DualScalar(0.0, 1.0));
        Triple<S> out;
        for (int i = 0; i < 3; ++i) out[i] = real[i].evaluate(t) + eps * dual[i].evaluate(t);
        return out;
    }
};

DualCurve series_curve(const SeriesDefinition& series, Interval domain, std::string name = "series");

/// The series curve projected onto the dual unit sphere, α̃/‖α̃‖.
DualCurve normalized_series_curve(const SeriesDefinition& series, Interval domain,
                                  std::string name = "normalized");

/// x ↦ A x + v applied to a formula curve, with a real linear map A acting on both parts.
DualCurve affine_image(const SeriesDefinition& series, bool normalize, const Eigen::Matrix3d& A,
                       const DualVec3& offset, Interval domain, std::string name);

}  // namespace dualgeom
