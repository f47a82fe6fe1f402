#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <iosfwd>

namespace dualgeom {

/// Element a + εa* of the ring of dual numbers (ε² = 0).
struct DualScalar {
    double real = 0.0;
    double dual = 0.0;

    constexpr DualScalar() = default;
    constexpr DualScalar(double r) : real(r) {}  // NOLINT: real numbers embed implicitly
    constexpr DualScalar(double r, double d) : real(r), dual(d) {}

    constexpr DualScalar& operator+=(const DualScalar& o) {
        real += o.real;
        dual += o.dual;
        return *this;
    }
    constexpr DualScalar& operator-=(const DualScalar& o) {
        real -= o.real;
        dual -= o.dual;
        return *this;
    }
    constexpr DualScalar& operator*=(const DualScalar& o) {
        dual = real * o.dual + dual * o.real;
        real *= o.real;
        return *this;
    }
    DualScalar& operator/=(const DualScalar& o);
};

constexpr DualScalar operator+(DualScalar x, const DualScalar& y) { return x += y; }
constexpr DualScalar operator-(DualScalar x, const DualScalar& y) { return x -= y; }
constexpr DualScalar operator*(DualScalar x, const DualScalar& y) { return x *= y; }
constexpr DualScalar operator-(const DualScalar& x) { return {-x.real, -x.dual}; }
DualScalar operator/(const DualScalar& x, const DualScalar& y);

// Below this magnitude the real part is treated as zero and the number as a zero divisor.
inline constexpr double kZeroDivisorThreshold = 1e-12;

/// Multiplicative inverse; throws DivisionByPureDual when |x.real| < kZeroDivisorThreshold.
DualScalar inverse(const DualScalar& x);

/// f(x + εx*) = f(x) + εx* f'(x).
DualScalar lift(const std::function<double(double)>& f,
                const std::function<double(double)>& f_prime, const DualScalar& x);

/// Principal square root; throws NonPositiveRealPart when x.real <= 0.
DualScalar sqrt(const DualScalar& x);

inline DualScalar sin(const DualScalar& x) { return {std::sin(x.real), x.dual * std::cos(x.real)}; }
inline DualScalar cos(const DualScalar& x) { return {std::cos(x.real), -x.dual * std::sin(x.real)}; }
inline DualScalar exp(const DualScalar& x) {
    const double e = std::exp(x.real);
    return {e, x.dual * e};
}

/// Componentwise comparison: |Δ| <= abs_tol + rel_tol·max(|x|,|y|) on each part.
bool approx_equal(const DualScalar& x, const DualScalar& y, double abs_tol = 1e-10,
                  double rel_tol = 1e-10);

/// Largest absolute component; the scalar used when reporting dual residuals.
inline double max_abs(const DualScalar& x) { return std::max(std::abs(x.real), std::abs(x.dual)); }

std::ostream& operator<<(std::ostream& os, const DualScalar& x);

}  // namespace dualgeom
