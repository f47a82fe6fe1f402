#pragma once

#include <iosfwd>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "dualgeom/dual_scalar.hpp"

namespace dualgeom {

using Vec3 = Eigen::Vector3d;

/// Dual 3-vector a + εa*. When unit it is the Plücker pair (direction, moment) of a line.
struct DualVec3 {
    Vec3 real = Vec3::Zero();
    Vec3 dual = Vec3::Zero();

    DualVec3() = default;
    DualVec3(const Vec3& r, const Vec3& d) : real(r), dual(d) {}

    DualScalar operator[](int i) const { return {real[i], dual[i]}; }
    void set(int i, const DualScalar& v) {
        real[i] = v.real;
        dual[i] = v.dual;
    }

    static DualVec3 zero() { return {}; }

    DualVec3& operator+=(const DualVec3& o) {
        real += o.real;
        dual += o.dual;
        return *this;
    }
    DualVec3& operator-=(const DualVec3& o) {
        real -= o.real;
        dual -= o.dual;
        return *this;
    }
};

inline DualVec3 operator+(DualVec3 x, const DualVec3& y) { return x += y; }
inline DualVec3 operator-(DualVec3 x, const DualVec3& y) { return x -= y; }
inline DualVec3 operator-(const DualVec3& x) { return {-x.real, -x.dual}; }

/// Dual scalar times dual vector: (s + εs*)(a + εa*) = sa + ε(sa* + s*a).
inline DualVec3 operator*(const DualScalar& s, const DualVec3& v) {
    return {s.real * v.real, s.real * v.dual + s.dual * v.real};
}
inline DualVec3 operator*(const DualVec3& v, const DualScalar& s) { return s * v; }

/// g(x, y) = <a,b> + ε(<a,b*> + <a*,b>).
inline DualScalar dot(const DualVec3& x, const DualVec3& y) {
    return {x.real.dot(y.real), x.real.dot(y.dual) + x.dual.dot(y.real)};
}

/// x × y = a×b + ε(a×b* + a*×b).
inline DualVec3 cross(const DualVec3& x, const DualVec3& y) {
    return {x.real.cross(y.real), x.real.cross(y.dual) + x.dual.cross(y.real)};
}

/// ‖x‖ = ‖a‖ + ε<a,a*>/‖a‖. Throws ZeroRealPart when ‖a‖ vanishes.
DualScalar norm(const DualVec3& x);

/// x / ‖x‖, a point of the dual unit sphere.
DualVec3 normalize(const DualVec3& x);

/// Largest absolute component over both parts.
inline double max_abs(const DualVec3& x) {
    return std::max(x.real.cwiseAbs().maxCoeff(), x.dual.cwiseAbs().maxCoeff());
}

// Tolerance on both components of g(v,v) - 1 for a vector to count as unit.
inline constexpr double kUnitTolerance = 1e-8;

bool is_unit(const DualVec3& v, double tol = kUnitTolerance);

std::ostream& operator<<(std::ostream& os, const DualVec3& v);

}  // namespace dualgeom
