#pragma once

#include "dualgeom/curve.hpp"
#include "dualgeom/quadrature.hpp"

namespace dualgeom {

/// Dual arc length s + εs* = ∫‖α̃'(t)‖dt from t0 to t1. The real part is the Euclidean length
/// of the indicatrix; the dual part integrates g(T, dα*/dt). Throws SingularIndicatrix where
/// the indicatrix stops.
DualScalar dual_arc_length(const DualCurve& curve, double t0, double t1,
                           const QuadratureOptions& options = {});

/// The same curve reparametrized by the real arc length of its indicatrix, with domain
/// [0, L]. Exact derivatives survive when the input has them (via Taylor composition).
DualCurve reparametrize_by_arclength(const DualCurve& curve);

}  // namespace dualgeom
