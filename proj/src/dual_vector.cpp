#include "dualgeom/dual_vector.hpp"

#include <ostream>
#include <sstream>

#include "dualgeom/error.hpp"

namespace dualgeom {

namespace {
constexpr double kZeroNormThreshold = 1e-12;
}

DualScalar norm(const DualVec3& x) {
    const double length = x.real.norm();
    if (length < kZeroNormThreshold) {
        std::ostringstream msg;
        msg << "dual norm is singular for " << x;
        throw Error(ErrorCode::ZeroRealPart, msg.str());
    }
    return {length, x.real.dot(x.dual) / length};
}

DualVec3 normalize(const DualVec3& x) { return inverse(norm(x)) * x; }

bool is_unit(const DualVec3& v, double tol) {
    const DualScalar g = dot(v, v);
    return std::abs(g.real - 1.0) <= tol && std::abs(g.dual) <= tol;
}

std::ostream& operator<<(std::ostream& os, const DualVec3& v) {
    return os << "((" << v.real.x() << "," << v.real.y() << "," << v.real.z() << "),("
              << v.dual.x() << "," << v.dual.y() << "," << v.dual.z() << "))";
}

}  // namespace dualgeom
