#include "dualgeom/curves.hpp"

#include <cmath>

namespace dualgeom {

namespace {

template <class S>
S dual_unit() {
    return S(DualScalar(0.0, 1.0));
}

template <class S>
Triple<S> normalized(const Triple<S>& p) {
    using std::sqrt;
    const S inv_length = S(1.0) / sqrt(dot(p, p));
    return scale(inv_length, p);
}

}  // namespace

DualCurve study_circle(Interval domain) {
    return DualCurve::from_formula("study_circle", domain, [](const auto& t) {
        using S = std::decay_t<decltype(t)>;
        const S eps = dual_unit<S>();
        return Triple<S>{cos(t) - eps * t * sin(t), sin(t) + eps * t * cos(t), S(0.0)};
    });
}

DualCurve real_helix(double a, double b, Interval domain) {
    const double c = std::sqrt(a * a + b * b);
    return DualCurve::from_formula("real_helix", domain, [a, b, c](const auto& t) {
        using S = std::decay_t<decltype(t)>;
        const S u = S(1.0 / c) * t;
        return Triple<S>{S(a) * cos(u), S(a) * sin(u), S(b) * u};
    });
}

DualCurve great_circle(Interval domain) {
    return DualCurve::from_formula("great_circle", domain, [](const auto& t) {
        using S = std::decay_t<decltype(t)>;
        return Triple<S>{cos(t), sin(t), S(0.0)};
    });
}

DualCurve dual_loxodrome(double k, double k_dual, Interval domain) {
    const DualScalar rate{k, k_dual};
    return DualCurve::from_formula("dual_loxodrome", domain, [rate](const auto& u) {
        using S = std::decay_t<decltype(u)>;
        const S up = exp(u);
        const S down = exp(-u);
        const S sech = S(2.0) / (up + down);
        const S angle = S(rate) * u;
        return Triple<S>{sech * cos(angle), sech * sin(angle), (up - down) / (up + down)};
    });
}

DualCurve series_curve(const SeriesDefinition& series, Interval domain, std::string name) {
    return DualCurve::from_formula(std::move(name), domain,
                                   [series](const auto& t) { return series(t); });
}

DualCurve normalized_series_curve(const SeriesDefinition& series, Interval domain,
                                  std::string name) {
    return DualCurve::from_formula(std::move(name), domain,
                                   [series](const auto& t) { return normalized(series(t)); });
}

DualCurve affine_image(const SeriesDefinition& series, bool normalize, const Eigen::Matrix3d& A,
                       const DualVec3& offset, Interval domain, std::string name) {
    return DualCurve::from_formula(
        std::move(name), domain, [series, normalize, A, offset](const auto& t) {
            using S = std::decay_t<decltype(t)>;
            const Triple<S> p = normalize ? normalized(series(t)) : series(t);
            Triple<S> out;
            for (int i = 0; i < 3; ++i) {
                out[i] = S(offset[i]);
                for (int j = 0; j < 3; ++j) out[i] = out[i] + S(A(i, j)) * p[j];
            }
            return out;
        });
}

}  // namespace dualgeom
