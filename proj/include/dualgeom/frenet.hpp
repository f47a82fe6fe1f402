#pragma once

#include "dualgeom/curve.hpp"

namespace dualgeom {

/// Dual Frenet apparatus at one parameter value.
///
/// Derivatives are taken along the dual arc length s̄ (d/ds̄ = (1/‖α̃'‖) d/dt), so for any
/// regular parametrization T = dα̃/ds̄ is a dual unit vector and
///     T' = k1 N,   N' = -k1 T + k2 B,   B' = -k2 N.
/// For a curve whose dual speed is already 1+ε0 this is the plain parameter derivative.
struct FrenetSample {
    double s = 0.0;
    DualVec3 position;
    DualVec3 T, N, B;
    DualScalar k1;     // dual curvature
    DualScalar k2;     // dual torsion, g(N', B)
    DualScalar speed;  // ‖α̃'(s)‖ = ds̄/ds

    // Frame derivatives along s̄, obtained by differentiating the frame itself.
    DualVec3 dT, dN, dB;
    // Torsion by the binormal route, -g(B', N), and by the closed form
    // g(α̃'×α̃'', α̃''')/‖α̃'×α̃''‖².
    DualScalar k2_from_binormal;
    DualScalar k2_closed_form;
    // (1/k1)' along s̄.
    DualScalar inv_k1_rate;
};

// Curvature real parts below this make the frame undefined.
inline constexpr double kCurvatureThreshold = 1e-8;

/// Throws VanishingCurvature when the curvature real part is below kCurvatureThreshold and
/// SingularIndicatrix when the indicatrix stops.
FrenetSample frenet_apparatus(const DualCurve& curve, double s);

/// Same, from a Taylor jet of α̃ at s.
FrenetSample frenet_from_jet(const Triple<DualJet>& jet, double s);

struct FrenetResiduals {
    double ode = 0.0;             // max component of the three Frenet equation residuals
    double orthonormality = 0.0;  // max component of g(·,·) minus the Kronecker pattern, B - T×N
};

FrenetResiduals frenet_residuals(const FrenetSample& sample);

}  // namespace dualgeom
