#include "dualgeom/arc_length.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "dualgeom/error.hpp"

namespace dualgeom {

namespace {

constexpr double kSingularSpeed = 1e-10;
constexpr int kTableIntervals = 256;
constexpr int kNewtonIterations = 40;

DualVec3 velocity(const DualCurve& curve, double t) {
    if (curve.domain().contains(t, 1e-12)) return derivative(curve, t, 1);
    // Stencils of a finite-difference caller may probe just past the ends.
    const double h = 1e-5;
    return DualScalar(1.0 / (12 * h)) *
           (curve.extended_position(t - 2 * h) - DualScalar(8.0) * curve.extended_position(t - h) +
            DualScalar(8.0) * curve.extended_position(t + h) - curve.extended_position(t + 2 * h));
}

double speed(const DualCurve& curve, double t) {
    const double v = velocity(curve, t).real.norm();
    if (v < kSingularSpeed) {
        std::ostringstream msg;
        msg << "indicatrix of '" << curve.name() << "' is singular at t=" << t;
        throw Error(ErrorCode::SingularIndicatrix, msg.str());
    }
    return v;
}

double real_length(const DualCurve& curve, double a, double b, double tol) {
    QuadratureOptions options;
    options.abs_tol = tol;
    return integrate_dual([&](double t) { return DualScalar(speed(curve, t)); }, a, b, options)
        .real;
}

// Monotone map s -> t built from a coarse table of cumulative lengths refined by Newton steps.
class ArcLengthInverse {
public:
    explicit ArcLengthInverse(DualCurve curve) : curve_(std::move(curve)) {
        const Interval& d = curve_.domain();
        knots_.resize(kTableIntervals + 1);
        lengths_.resize(kTableIntervals + 1, 0.0);
        for (int k = 0; k <= kTableIntervals; ++k) knots_[k] = d.lo + d.length() * k / kTableIntervals;
        for (int k = 0; k < kTableIntervals; ++k) {
            lengths_[k + 1] = lengths_[k] + real_length(curve_, knots_[k], knots_[k + 1], 1e-14);
        }
    }

    double total() const { return lengths_.back(); }

    double parameter_at(double s) const {
        const auto it = std::upper_bound(lengths_.begin(), lengths_.end(), s);
        const int k = std::clamp(static_cast<int>(it - lengths_.begin()) - 1, 0,
                                 kTableIntervals - 1);
        const double t_ref = knots_[k];
        const double s_ref = lengths_[k];
        const double span = lengths_[k + 1] - lengths_[k];
        double t = span > 0 ? t_ref + (s - s_ref) / span * (knots_[k + 1] - knots_[k]) : t_ref;
        for (int i = 0; i < kNewtonIterations; ++i) {
            const double residual = s_ref + real_length(curve_, t_ref, t, 1e-15) - s;
            const double step = residual / speed(curve_, t);
            t -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(t))) break;
        }
        return t;
    }

    const DualCurve& curve() const { return curve_; }

private:
    DualCurve curve_;
    std::vector<double> knots_;
    std::vector<double> lengths_;
};

// Taylor jet of α̃(t(s)) at s, with t(s) the arc-length inverse: t' = 1/‖α'(t)‖.
Triple<DualJet> composed_jet(const ArcLengthInverse& inverse, double s) {
    const double t0 = inverse.parameter_at(s);
    const Triple<DualJet> original = inverse.curve().exact_jet(t0);

    // Real velocity coefficients about t0.
    Triple<RealJet> velocity_coeffs;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < RealJet::kOrder; ++k) {
            velocity_coeffs[i].c[k] = (k + 1) * original[i].c[k + 1].real;
        }
    }
    auto substitute = [](const auto& coeffs, const auto& delta) {
        using J = std::decay_t<decltype(delta)>;
        J result = J(coeffs.c[RealJet::kOrder]);
        for (int k = RealJet::kOrder - 1; k >= 0; --k) result = result * delta + J(coeffs.c[k]);
        return result;
    };

    RealJet param(t0);
    for (int pass = 0; pass < RealJet::kOrder; ++pass) {
        const RealJet delta = param - RealJet(t0);
        Triple<RealJet> v;
        for (int i = 0; i < 3; ++i) v[i] = substitute(velocity_coeffs[i], delta);
        const RealJet rate = RealJet(1.0) / sqrt(dot(v, v));
        RealJet next(t0);
        for (int k = 0; k < RealJet::kOrder; ++k) next.c[k + 1] = rate.c[k] / (k + 1);
        param = next;
    }

    const DualJet delta = promote(param - RealJet(t0));
    Triple<DualJet> result;
    for (int i = 0; i < 3; ++i) result[i] = substitute(original[i], delta);
    return result;
}

}  // namespace

DualScalar dual_arc_length(const DualCurve& curve, double t0, double t1,
                           const QuadratureOptions& options) {
    return integrate_dual(
        [&](double t) {
            const DualVec3 v = derivative(curve, t, 1);
            if (v.real.norm() < kSingularSpeed) {
                std::ostringstream msg;
                msg << "indicatrix of '" << curve.name() << "' is singular at t=" << t;
                throw Error(ErrorCode::SingularIndicatrix, msg.str());
            }
            return norm(v);
        },
        t0, t1, options);
}

DualCurve reparametrize_by_arclength(const DualCurve& curve) {
    auto inverse = std::make_shared<const ArcLengthInverse>(curve);
    const Interval domain{0.0, inverse->total()};
    auto position = [inverse](double s) {
        return inverse->curve().extended_position(inverse->parameter_at(s));
    };
    DualCurve::JetFn exact;
    if (curve.has_exact_derivatives()) {
        exact = [inverse](double s) { return composed_jet(*inverse, s); };
    }
    return DualCurve(curve.name() + " (arc length)", domain, position, exact);
}

}  // namespace dualgeom
