#pragma once

#include <optional>
#include <vector>

#include "dualgeom/curve.hpp"
#include "dualgeom/frenet.hpp"

namespace dualgeom {

inline constexpr double kExactVerdictTolerance = 1e-8;
inline constexpr double kFiniteDifferenceVerdictTolerance = 1e-5;
inline constexpr double kTorsionThreshold = 1e-8;
inline constexpr double kConditionThreshold = 1e10;
inline constexpr int kDefaultSamples = 256;

/// Verdict threshold matched to how the curve is differentiated.
double default_tolerance(const DualCurve& curve);

/// n parameter values spread uniformly over the domain, inset by the stencil margin.
std::vector<double> sample_parameters(const DualCurve& curve, int n_samples);

/// Components of the position vector in the Frenet frame.
struct PositionComponents {
    DualScalar lambda;   // g(α̃, N)
    DualScalar mu;       // g(α̃, B)
    DualScalar tangent;  // g(α̃, T)
};

PositionComponents position_decomposition(const DualCurve& curve, double s);

struct NormalCurveTest {
    bool is_normal = false;
    double residual_real = 0.0;  // max |g(α,T)| real part over samples
    double residual_dual = 0.0;
    double worst_s = 0.0;
    double tol = 0.0;

    double residual() const { return std::max(residual_real, residual_dual); }
};

/// The curve is normal when g(α̃, T) vanishes in both parts at every sample.
NormalCurveTest normal_curve_test(const DualCurve& curve, int n_samples, double tol);

/// Whole-curve torsion behaviour. A curve whose torsion vanishes identically is a dual plane
/// curve; the binormal term of the sphere centre then drops out. Torsion vanishing at only
/// some samples, or changing sign between samples, violates the hypotheses and is reported
/// as VanishingTorsion.
enum class TorsionRegime { Regular, Planar };

struct FitOptions {
    int n_samples = kDefaultSamples;
    std::optional<double> tol;
    /// Parameter where the antiderivative of the torsion is zero; the first sample when unset.
    std::optional<double> anchor;
    /// Constant added to the antiderivative, the anchor shift used by covariance checks.
    DualScalar anchor_offset{0.0, 0.0};
};

struct FitSample {
    double s = 0.0;
    DualScalar tbar;            // ∫ k2 ds̄ from the anchor
    DualScalar inv_k1;          // 1/k1
    DualScalar lambda;          // g(α̃, N)
    DualScalar mu;              // g(α̃, B)
};

struct NormalFit {
    DualScalar c1;
    DualScalar c2;
    double residual_rms_real = 0.0;
    double residual_rms_dual = 0.0;
    double condition = 0.0;
    bool is_normal = false;
    double tol = 0.0;
    TorsionRegime regime = TorsionRegime::Regular;
    std::vector<FitSample> samples;

    double residual_rms() const { return std::max(residual_rms_real, residual_rms_dual); }
};

/// Least-squares fit of 1/k1 = c1 cos t + c2 sin t, g(α̃,N) = -(c1 cos t + c2 sin t) and
/// g(α̃,B) = c1 sin t - c2 cos t with t = ∫k2 ds̄, expanded into real and dual parts: a linear
/// system in c1, c2, c1*, c2*.
NormalFit fit_curvature_solution(const DualCurve& curve, const FitOptions& options = {});

struct SphereCandidate {
    DualVec3 center;
    DualScalar radius_sq;
};

/// Pointwise centre α̃ + (1/k1)N + (1/k1)'(1/k2)B and squared radius (1/k1)² + ((1/k1)'/k2)².
/// Where torsion and (1/k1)' both vanish the binormal term is taken as zero (an osculating
/// circle); torsion vanishing alone throws VanishingTorsion.
SphereCandidate sphere_center_radius(const DualCurve& curve, double s);

struct SphereFit {
    DualVec3 center;
    DualScalar radius;
    double center_drift = 0.0;
    double radius_drift = 0.0;
    bool is_spherical = false;
    bool centered_at_origin = false;
    double tol = 0.0;
    TorsionRegime regime = TorsionRegime::Regular;
};

/// Evaluates the sphere candidate at every sample; the curve lies on a dual sphere when
/// centre and radius do not drift.
SphereFit spherical_test(const DualCurve& curve, int n_samples, double tol);

/// max |dual(1/k1) + g(α,N*) + g(α*,N)| over samples; zero exactly for normal curves.
double normal_moment_residual(const DualCurve& curve, int n_samples);

struct RadiusConsistency {
    int sign = 1;                    // branch of ±√(r² - c2²) matching c1
    DualScalar root;                 // √(r² - c2²)
    double coefficient_mismatch = 0.0;
    double chain_discrepancy = 0.0;  // max spread of the three expressions for 1/k1
    bool consistent = false;
    double tol = 0.0;
};

/// Checks c1 = ±√(r² - c2²) and that c1 cos t + c2 sin t, 1/k1 - ε(g(α,N*) + g(α*,N)) and
/// ±√(r² - c2²) cos t + c2 sin t agree at every fitted sample. Throws NonPositiveRealPart or
/// InconsistentFits.
RadiusConsistency radius_constraint(const NormalFit& fit, const SphereFit& sphere,
                                    double tol = 1e-6);

}  // namespace dualgeom
