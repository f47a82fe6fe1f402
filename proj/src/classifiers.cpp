#include "dualgeom/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "dualgeom/error.hpp"
#include "dualgeom/quadrature.hpp"

namespace dualgeom {

namespace {

bool negligible(const DualScalar& x, double threshold) {
    return std::abs(x.real) < threshold && std::abs(x.dual) < threshold;
}

std::vector<FrenetSample> frames_at(const DualCurve& curve, const std::vector<double>& params) {
    std::vector<FrenetSample> frames;
    frames.reserve(params.size());
    for (double s : params) frames.push_back(frenet_apparatus(curve, s));
    return frames;
}

TorsionRegime torsion_regime(const std::vector<FrenetSample>& frames) {
    std::size_t vanishing = 0;
    const FrenetSample* first_vanishing = nullptr;
    bool dual_torsion_left = false;
    for (const FrenetSample& f : frames) {
        if (std::abs(f.k2.real) < kTorsionThreshold) {
            ++vanishing;
            if (!first_vanishing) first_vanishing = &f;
            if (std::abs(f.k2.dual) >= kTorsionThreshold) dual_torsion_left = true;
        }
    }
    if (vanishing == 0) {
        // A sign change means the torsion has a zero between two samples.
        for (std::size_t i = 1; i < frames.size(); ++i) {
            if ((frames[i - 1].k2.real < 0) != (frames[i].k2.real < 0)) {
                std::ostringstream msg;
                msg << "torsion changes sign between s=" << frames[i - 1].s << " and s=" << frames[i].s;
                throw Error(ErrorCode::VanishingTorsion, msg.str());
            }
        }
        return TorsionRegime::Regular;
    }
    if (vanishing == frames.size() && !dual_torsion_left) return TorsionRegime::Planar;
    std::ostringstream msg;
    msg << "torsion " << first_vanishing->k2 << " vanishes at s=" << first_vanishing->s
        << " (" << vanishing << " of " << frames.size() << " samples)";
    throw Error(ErrorCode::VanishingTorsion, msg.str());
}

// Binormal coefficient (1/k1)'/k2 of the sphere centre.
DualScalar binormal_term(const FrenetSample& f, TorsionRegime regime) {
    if (regime == TorsionRegime::Planar) return {0.0, 0.0};
    if (std::abs(f.k2.real) < kTorsionThreshold) {
        std::ostringstream msg;
        msg << "torsion " << f.k2 << " vanishes at s=" << f.s;
        throw Error(ErrorCode::VanishingTorsion, msg.str());
    }
    return f.inv_k1_rate / f.k2;
}

SphereCandidate candidate_from(const FrenetSample& f, TorsionRegime regime) {
    const DualScalar radius_of_curvature = inverse(f.k1);
    const DualScalar b = binormal_term(f, regime);
    return {f.position + radius_of_curvature * f.N + b * f.B,
            radius_of_curvature * radius_of_curvature + b * b};
}

DualScalar torsion_rate(const DualCurve& curve, double s) {
    const FrenetSample f = frenet_apparatus(curve, s);
    return f.k2 * f.speed;
}

}  // namespace

double default_tolerance(const DualCurve& curve) {
    return curve.has_exact_derivatives() ? kExactVerdictTolerance
                                         : kFiniteDifferenceVerdictTolerance;
}

std::vector<double> sample_parameters(const DualCurve& curve, int n_samples) {
    if (n_samples < 1) throw Error(ErrorCode::DomainError, "need at least one sample");
    const double margin = stencil_margin();
    const Interval& d = curve.domain();
    if (d.length() <= 2 * margin) {
        std::ostringstream msg;
        msg << "domain [" << d.lo << ", " << d.hi << "] is shorter than the stencil margins";
        throw Error(ErrorCode::OutOfDomain, msg.str());
    }
    const double lo = d.lo + margin;
    const double hi = d.hi - margin;
    std::vector<double> params(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        params[i] = n_samples == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n_samples - 1);
    }
    return params;
}

PositionComponents position_decomposition(const DualCurve& curve, double s) {
    const FrenetSample f = frenet_apparatus(curve, s);
    return {dot(f.position, f.N), dot(f.position, f.B), dot(f.position, f.T)};
}

NormalCurveTest normal_curve_test(const DualCurve& curve, int n_samples, double tol) {
    NormalCurveTest out;
    out.tol = tol;
    double worst = -1.0;
    for (double s : sample_parameters(curve, n_samples)) {
        const DualScalar g = position_decomposition(curve, s).tangent;
        out.residual_real = std::max(out.residual_real, std::abs(g.real));
        out.residual_dual = std::max(out.residual_dual, std::abs(g.dual));
        if (max_abs(g) > worst) {
            worst = max_abs(g);
            out.worst_s = s;
        }
    }
    out.is_normal = out.residual_real < tol && out.residual_dual < tol;
    return out;
}

NormalFit fit_curvature_solution(const DualCurve& curve, const FitOptions& options) {
    const std::vector<double> params = sample_parameters(curve, options.n_samples);
    const std::vector<FrenetSample> frames = frames_at(curve, params);

    NormalFit fit;
    fit.tol = options.tol.value_or(default_tolerance(curve));
    fit.regime = torsion_regime(frames);

    // Antiderivative of the torsion along the dual arc length, accumulated sample to sample.
    const auto integrand = [&curve](double s) { return torsion_rate(curve, s); };
    const double anchor = options.anchor.value_or(params.front());
    DualScalar tbar = options.anchor_offset + integrate_dual(integrand, anchor, params.front());

    const int n = static_cast<int>(params.size());
    Eigen::MatrixXd A(6 * n, 4);
    Eigen::VectorXd rhs(6 * n);
    fit.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0) tbar += integrate_dual(integrand, params[i - 1], params[i]);
        const FrenetSample& f = frames[i];
        FitSample sample{params[i], tbar, inverse(f.k1), dot(f.position, f.N),
                         dot(f.position, f.B)};
        fit.samples.push_back(sample);

        const double c = std::cos(tbar.real);
        const double s = std::sin(tbar.real);
        const double ts = tbar.dual;
        // Unknown order: c1, c2, c1*, c2*.
        const int r = 6 * i;
        A.row(r + 0) << c, s, 0, 0;
        A.row(r + 1) << -ts * s, ts * c, c, s;
        A.row(r + 2) << -c, -s, 0, 0;
        A.row(r + 3) << ts * s, -ts * c, -c, -s;
        A.row(r + 4) << s, -c, 0, 0;
        A.row(r + 5) << ts * c, ts * s, s, -c;
        rhs.segment<6>(r) << sample.inv_k1.real, sample.inv_k1.dual, sample.lambda.real,
            sample.lambda.dual, sample.mu.real, sample.mu.dual;
    }

    const Eigen::Matrix4d normal_matrix = A.transpose() * A;
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eigen(normal_matrix);
    const double smallest = eigen.eigenvalues().minCoeff();
    fit.condition = smallest > 0 ? eigen.eigenvalues().maxCoeff() / smallest
                                 : std::numeric_limits<double>::infinity();
    if (fit.condition > kConditionThreshold) {
        std::ostringstream msg;
        msg << "normal equations have condition " << fit.condition;
        throw Error(ErrorCode::IllConditionedFit, msg.str());
    }
    const Eigen::Vector4d x = normal_matrix.ldlt().solve(A.transpose() * rhs);
    fit.c1 = {x[0], x[2]};
    fit.c2 = {x[1], x[3]};

    const Eigen::VectorXd residual = A * x - rhs;
    double sum_real = 0.0, sum_dual = 0.0;
    for (int k = 0; k < 6 * n; k += 2) {
        sum_real += residual[k] * residual[k];
        sum_dual += residual[k + 1] * residual[k + 1];
    }
    fit.residual_rms_real = std::sqrt(sum_real / (3 * n));
    fit.residual_rms_dual = std::sqrt(sum_dual / (3 * n));
    fit.is_normal = fit.residual_rms() < fit.tol;
    return fit;
}

SphereCandidate sphere_center_radius(const DualCurve& curve, double s) {
    const FrenetSample f = frenet_apparatus(curve, s);
    const bool osculating_circle =
        negligible(f.k2, kTorsionThreshold) && negligible(f.inv_k1_rate, kTorsionThreshold);
    return candidate_from(f, osculating_circle ? TorsionRegime::Planar : TorsionRegime::Regular);
}

SphereFit spherical_test(const DualCurve& curve, int n_samples, double tol) {
    const std::vector<FrenetSample> frames = frames_at(curve, sample_parameters(curve, n_samples));
    SphereFit out;
    out.tol = tol;
    out.regime = torsion_regime(frames);

    std::vector<SphereCandidate> candidates;
    candidates.reserve(frames.size());
    DualVec3 center_sum;
    DualScalar radius_sq_sum;
    for (const FrenetSample& f : frames) {
        candidates.push_back(candidate_from(f, out.regime));
        center_sum += candidates.back().center;
        radius_sq_sum += candidates.back().radius_sq;
    }
    const DualScalar count(static_cast<double>(frames.size()));
    out.center = inverse(count) * center_sum;
    out.radius = sqrt(radius_sq_sum / count);
    for (const SphereCandidate& c : candidates) {
        out.center_drift = std::max(out.center_drift, max_abs(c.center - out.center));
        out.radius_drift = std::max(out.radius_drift, max_abs(sqrt(c.radius_sq) - out.radius));
    }
    out.is_spherical = out.center_drift < tol && out.radius_drift < tol;
    out.centered_at_origin = out.is_spherical && max_abs(out.center) < tol;
    return out;
}

double normal_moment_residual(const DualCurve& curve, int n_samples) {
    double worst = 0.0;
    for (double s : sample_parameters(curve, n_samples)) {
        const FrenetSample f = frenet_apparatus(curve, s);
        // Dual part of g(α̃, N) is g(α, N*) + g(α*, N).
        const double moment = dot(f.position, f.N).dual;
        worst = std::max(worst, std::abs(inverse(f.k1).dual + moment));
    }
    return worst;
}

RadiusConsistency radius_constraint(const NormalFit& fit, const SphereFit& sphere, double tol) {
    RadiusConsistency out;
    out.tol = tol;
    out.root = sqrt(sphere.radius * sphere.radius - fit.c2 * fit.c2);

    const double plus = max_abs(fit.c1 - out.root);
    const double minus = max_abs(fit.c1 + out.root);
    out.sign = plus <= minus ? 1 : -1;
    out.coefficient_mismatch = std::min(plus, minus);
    if (out.coefficient_mismatch > tol) {
        std::ostringstream msg;
        msg << "c1 = " << fit.c1 << " matches neither ±" << out.root << " (mismatch "
            << out.coefficient_mismatch << ")";
        throw Error(ErrorCode::InconsistentFits, msg.str());
    }

    const DualScalar signed_root = DualScalar(out.sign) * out.root;
    for (const FitSample& sample : fit.samples) {
        const DualScalar cos_t = cos(sample.tbar);
        const DualScalar sin_t = sin(sample.tbar);
        const DualScalar from_coefficients = fit.c1 * cos_t + fit.c2 * sin_t;
        const DualScalar from_moment{sample.inv_k1.real, sample.lambda.dual * -1.0};
        const DualScalar from_radius = signed_root * cos_t + fit.c2 * sin_t;
        out.chain_discrepancy =
            std::max({out.chain_discrepancy, max_abs(from_coefficients - from_moment),
                      max_abs(from_moment - from_radius), max_abs(from_coefficients - from_radius)});
    }
    out.consistent = out.chain_discrepancy < tol;
    return out;
}

}  // namespace dualgeom
