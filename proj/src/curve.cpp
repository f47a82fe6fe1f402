#include "dualgeom/curve.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "dualgeom/error.hpp"

namespace dualgeom {

namespace {

constexpr double kDomainSlack = 1e-12;

// Five-point central stencils. The first two orders are O(h^4), the last two O(h^2);
// one Richardson step removes the leading term in each case.
struct Stencil {
    std::array<double, 5> weights;  // offsets -2h..2h
    double divisor;                 // times h^order
    int accuracy;
};

constexpr std::array<Stencil, 5> kStencils = {{
    {{0, 0, 1, 0, 0}, 1.0, 0},
    {{1, -8, 0, 8, -1}, 12.0, 4},
    {{-1, 16, -30, 16, -1}, 12.0, 4},
    {{-1, 2, 0, -2, 1}, 2.0, 2},
    {{1, -4, 6, -4, 1}, 1.0, 2},
}};

// Step balancing the refined truncation error h^(accuracy+2) against roundoff eps/h^order.
double step_for(int order) {
    const double eps = std::numeric_limits<double>::epsilon();
    return std::pow(eps, 1.0 / (kStencils[order].accuracy + 2 + order));
}

DualVec3 apply_stencil(const DualCurve& curve, double t, int order, double h) {
    const Stencil& s = kStencils[order];
    DualVec3 sum;
    for (int i = 0; i < 5; ++i) {
        if (s.weights[i] == 0.0) continue;
        sum += DualScalar(s.weights[i]) * curve.extended_position(t + (i - 2) * h);
    }
    return DualScalar(1.0 / (s.divisor * std::pow(h, order))) * sum;
}

}  // namespace

DualVec3 finite_difference(const DualCurve& curve, double t, int order, double h) {
    if (order < 0 || order > 4) throw Error(ErrorCode::DomainError, "derivative order must be in 0..4");
    if (order == 0) return curve.extended_position(t);
    const DualVec3 coarse = apply_stencil(curve, t, order, h);
    const DualVec3 fine = apply_stencil(curve, t, order, h / 2);
    const double gain = std::pow(2.0, kStencils[order].accuracy);
    return DualScalar(1.0 / (gain - 1.0)) * (DualScalar(gain) * fine - coarse);
}

namespace {

DualVec3 finite_difference(const DualCurve& curve, double t, int order) {
    return finite_difference(curve, t, order, step_for(order));
}

}  // namespace

DualCurve::DualCurve(std::string name, Interval domain, PositionFn position, JetFn exact_jet)
    : name_(std::move(name)),
      domain_(domain),
      position_(std::move(position)),
      exact_jet_(std::move(exact_jet)) {
    if (!(domain_.hi >= domain_.lo)) {
        throw Error(ErrorCode::SchemaViolation, "curve domain must satisfy lo <= hi");
    }
}

DualVec3 DualCurve::position(double t) const {
    if (!domain_.contains(t, kDomainSlack)) {
        std::ostringstream msg;
        msg << "t=" << t << " outside [" << domain_.lo << ", " << domain_.hi << "]";
        throw Error(ErrorCode::OutOfDomain, msg.str());
    }
    return position_(t);
}

Triple<DualJet> DualCurve::exact_jet(double t) const {
    if (!domain_.contains(t, kDomainSlack)) {
        std::ostringstream msg;
        msg << "t=" << t << " outside [" << domain_.lo << ", " << domain_.hi << "]";
        throw Error(ErrorCode::OutOfDomain, msg.str());
    }
    return exact_jet_(t);
}

DualCurve DualCurve::finite_difference_only() const {
    return DualCurve(name_, domain_, position_);
}

DualCurve DualCurve::with_name(std::string name) const {
    return DualCurve(std::move(name), domain_, position_, exact_jet_);
}

namespace {

void require_in_domain(const DualCurve& curve, double t) {
    if (!curve.domain().contains(t, kDomainSlack)) {
        std::ostringstream msg;
        msg << "t=" << t << " outside [" << curve.domain().lo << ", " << curve.domain().hi << "]";
        throw Error(ErrorCode::OutOfDomain, msg.str());
    }
}

}  // namespace

DualVec3 derivative(const DualCurve& curve, double t, int order) {
    if (order < 0 || order > 4) {
        throw Error(ErrorCode::DomainError, "derivative order must be in 0..4");
    }
    require_in_domain(curve, t);
    if (curve.has_exact_derivatives()) return dualgeom::derivative(curve.exact_jet(t), order);
    if (order == 0) return curve.position(t);
    return finite_difference(curve, t, order);
}

CurveDerivatives derivatives(const DualCurve& curve, double t) {
    require_in_domain(curve, t);
    CurveDerivatives d;
    if (curve.has_exact_derivatives()) {
        const Triple<DualJet> j = curve.exact_jet(t);
        for (int k = 0; k < 5; ++k) d[k] = dualgeom::derivative(j, k);
        return d;
    }
    d[0] = curve.position(t);
    for (int k = 1; k < 5; ++k) d[k] = finite_difference(curve, t, k);
    return d;
}

Triple<DualJet> jet(const DualCurve& curve, double t) {
    if (curve.has_exact_derivatives()) return curve.exact_jet(t);
    const CurveDerivatives d = derivatives(curve, t);
    Triple<DualJet> j;
    double factorial = 1.0;
    for (int k = 0; k < 5; ++k) {
        if (k > 1) factorial *= k;
        for (int i = 0; i < 3; ++i) j[i].c[k] = d[k][i] * DualScalar(1.0 / factorial);
    }
    return j;
}

double stencil_margin() {
    double widest = 0.0;
    for (int order = 1; order < 5; ++order) widest = std::max(widest, 2 * step_for(order));
    return widest;
}

}  // namespace dualgeom
