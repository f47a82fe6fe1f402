#pragma once

#include "dualgeom/dual_vector.hpp"

namespace dualgeom {

/// Oriented line through `point` with unit `direction`.
struct Line {
    Vec3 point = Vec3::Zero();
    Vec3 direction = Vec3::UnitX();
};

/// Plücker image (direction, point × direction); throws NotUnitDirection.
DualVec3 line_to_dual(const Line& line);

/// E. Study mapping from the dual unit sphere to oriented lines. The returned point is the
/// foot of the common perpendicular from the origin, a × a*.
Line dual_to_line(const DualVec3& v, double tol = kUnitTolerance);

struct DualAngle {
    DualScalar angle;  // θ + εθ*
    double distance;   // |θ*|, shortest distance between the lines
};

/// Dual angle from g(x, y) = cos θ - εθ* sin θ. Identical inputs give 0+ε0; other parallel
/// pairs throw ParallelLines because θ* is not recoverable from the formula.
DualAngle dual_angle(const DualVec3& x, const DualVec3& y);

}  // namespace dualgeom
