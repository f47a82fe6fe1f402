#include "dualgeom/line.hpp"

#include <cmath>
#include <sstream>

#include "dualgeom/error.hpp"

namespace dualgeom {

namespace {

constexpr double kParallelThreshold = 1e-9;

void require_unit(const DualVec3& v, const char* what, double tol = kUnitTolerance) {
    const DualScalar g = dot(v, v);
    if (std::abs(g.real - 1.0) > tol || std::abs(g.dual) > tol) {
        std::ostringstream msg;
        msg << what << " is not a dual unit vector: g(v,v) = " << g;
        throw Error(ErrorCode::NotUnit, msg.str());
    }
}

}  // namespace

DualVec3 line_to_dual(const Line& line) {
    const double length = line.direction.norm();
    if (std::abs(length - 1.0) > kUnitTolerance) {
        std::ostringstream msg;
        msg << "line direction has length " << length;
        throw Error(ErrorCode::NotUnitDirection, msg.str());
    }
    return {line.direction, line.point.cross(line.direction)};
}

Line dual_to_line(const DualVec3& v, double tol) {
    if (std::abs(v.real.squaredNorm() - 1.0) > tol) {
        std::ostringstream msg;
        msg << "direction part of " << v << " is not unit";
        throw Error(ErrorCode::NotUnit, msg.str());
    }
    if (std::abs(v.real.dot(v.dual)) > tol) {
        std::ostringstream msg;
        msg << "moment of " << v << " is not perpendicular to its direction";
        throw Error(ErrorCode::MomentNotPerpendicular, msg.str());
    }
    return {v.real.cross(v.dual), v.real};
}

DualAngle dual_angle(const DualVec3& x, const DualVec3& y) {
    require_unit(x, "first argument");
    require_unit(y, "second argument");

    const DualScalar g = dot(x, y);
    const double sin_theta = x.real.cross(y.real).norm();
    if (sin_theta < kParallelThreshold) {
        if (max_abs(x - y) <= 1e-12) return {DualScalar{0.0, 0.0}, 0.0};
        throw Error(ErrorCode::ParallelLines,
                    "lines are parallel; the dual angle does not determine their distance");
    }
    const double theta = std::atan2(sin_theta, g.real);
    const double theta_star = -g.dual / sin_theta;
    return {DualScalar{theta, theta_star}, std::abs(theta_star)};
}

}  // namespace dualgeom
