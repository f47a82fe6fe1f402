#pragma once

#include <array>
#include <functional>
#include <string>

#include "dualgeom/dual_vector.hpp"
#include "dualgeom/jet.hpp"

namespace dualgeom {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double t, double slack = 0.0) const { return t >= lo - slack && t <= hi + slack; }
};

/// Derivatives of orders 0..4 at a parameter value.
using CurveDerivatives = std::array<DualVec3, 5>;

/// A parametrized map t ↦ α̃(t) = α(t) + εα*(t) into dual 3-space.
///
/// The exact evaluator, when present, returns the fourth-order Taylor jet of the curve at t;
/// otherwise derivatives fall back to Richardson-refined central differences. Evaluators must
/// be pure so curves can be sampled from several threads.
class DualCurve {
public:
    using PositionFn = std::function<DualVec3(double)>;
    using JetFn = std::function<Triple<DualJet>(double)>;

    DualCurve(std::string name, Interval domain, PositionFn position, JetFn exact_jet = {});

    /// Builds a curve from a generic callable `formula(S t) -> Triple<S>` that is valid for
    /// S = DualScalar and S = DualJet; the jet instantiation supplies exact derivatives.
    template <class Formula>
    static DualCurve from_formula(std::string name, Interval domain, Formula formula) {
        auto position = [formula](double t) { return to_dual_vec(formula(DualScalar(t))); };
        auto jet = [formula](double t) { return formula(DualJet::variable(DualScalar(t))); };
        return DualCurve(std::move(name), domain, position, jet);
    }

    const std::string& name() const { return name_; }
    const Interval& domain() const { return domain_; }
    bool has_exact_derivatives() const { return static_cast<bool>(exact_jet_); }

    /// Position α̃(t); throws OutOfDomain outside the domain.
    DualVec3 position(double t) const;

    /// Evaluates the underlying map without the domain check. Finite-difference stencils that
    /// straddle an end use it, so evaluators must stay smooth slightly beyond the domain.
    DualVec3 extended_position(double t) const { return position_(t); }

    /// Exact Taylor jet at t. Precondition: has_exact_derivatives().
    Triple<DualJet> exact_jet(double t) const;

    /// Same curve with the exact evaluator dropped, forcing finite differences.
    DualCurve finite_difference_only() const;

    DualCurve with_name(std::string name) const;

private:
    std::string name_;
    Interval domain_;
    PositionFn position_;
    JetFn exact_jet_;
};

/// k-th derivative (0 <= order <= 4) at t; throws OutOfDomain when t is outside the domain.
DualVec3 derivative(const DualCurve& curve, double t, int order);

/// All derivatives of orders 0..4 at t.
CurveDerivatives derivatives(const DualCurve& curve, double t);

/// Taylor jet at t assembled from derivatives(): exact when available.
Triple<DualJet> jet(const DualCurve& curve, double t);

/// Central-difference estimate with step h plus one Richardson step; the error is
/// O(h^6) for orders 1 and 2 and O(h^4) for orders 3 and 4. Stencils may leave the domain.
DualVec3 finite_difference(const DualCurve& curve, double t, int order, double h);

/// Distance from the domain ends that finite-difference stencils need.
double stencil_margin();

}  // namespace dualgeom
