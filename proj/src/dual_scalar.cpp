#include "dualgeom/dual_scalar.hpp"

#include <ostream>
#include <sstream>

#include "dualgeom/error.hpp"

namespace dualgeom {

DualScalar inverse(const DualScalar& x) {
    if (std::abs(x.real) < kZeroDivisorThreshold) {
        std::ostringstream msg;
        msg << "cannot invert " << x << " (real part is a zero divisor)";
        throw Error(ErrorCode::DivisionByPureDual, msg.str());
    }
    const double r = 1.0 / x.real;
    return {r, -x.dual * r * r};
}

DualScalar& DualScalar::operator/=(const DualScalar& o) { return *this *= inverse(o); }

DualScalar operator/(const DualScalar& x, const DualScalar& y) { return x * inverse(y); }

DualScalar lift(const std::function<double(double)>& f,
                const std::function<double(double)>& f_prime, const DualScalar& x) {
    const double value = f(x.real);
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "lifted function is undefined at " << x.real;
        throw Error(ErrorCode::DomainError, msg.str());
    }
    if (x.dual == 0.0) return {value, 0.0};
    return {value, x.dual * f_prime(x.real)};
}

DualScalar sqrt(const DualScalar& x) {
    if (!(x.real > 0.0)) {
        std::ostringstream msg;
        msg << "square root needs a positive real part, got " << x;
        throw Error(ErrorCode::NonPositiveRealPart, msg.str());
    }
    const double root = std::sqrt(x.real);
    return {root, x.dual / (2.0 * root)};
}

bool approx_equal(const DualScalar& x, const DualScalar& y, double abs_tol, double rel_tol) {
    auto close = [&](double a, double b) {
        return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
    };
    return close(x.real, y.real) && close(x.dual, y.dual);
}

std::ostream& operator<<(std::ostream& os, const DualScalar& x) {
    return os << x.real << (x.dual < 0 ? "-" : "+") << "ε" << std::abs(x.dual);
}

}  // namespace dualgeom
