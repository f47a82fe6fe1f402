#include "dualgeom/frenet.hpp"

#include <algorithm>
#include <sstream>

#include "dualgeom/error.hpp"

namespace dualgeom {

namespace {

constexpr double kSingularSpeed = 1e-10;

Triple<DualJet> differentiate(const Triple<DualJet>& j) {
    Triple<DualJet> d;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < DualJet::kOrder; ++k) d[i].c[k] = DualScalar(k + 1) * j[i].c[k + 1];
    }
    return d;
}

DualVec3 value(const Triple<DualJet>& j) { return to_dual_vec({j[0].c[0], j[1].c[0], j[2].c[0]}); }
DualVec3 rate(const Triple<DualJet>& j) { return to_dual_vec({j[0].c[1], j[1].c[1], j[2].c[1]}); }

Triple<DualJet> divide(const Triple<DualJet>& v, const DualJet& s) {
    return {v[0] / s, v[1] / s, v[2] / s};
}

}  // namespace

FrenetSample frenet_from_jet(const Triple<DualJet>& position, double s) {
    const Triple<DualJet> r1 = differentiate(position);
    const Triple<DualJet> r2 = differentiate(r1);
    const Triple<DualJet> r3 = differentiate(r2);

    const DualJet speed_sq = dot(r1, r1);
    if (speed_sq.c[0].real < kSingularSpeed * kSingularSpeed) {
        std::ostringstream msg;
        msg << "indicatrix is singular at s=" << s;
        throw Error(ErrorCode::SingularIndicatrix, msg.str());
    }
    const DualJet speed = sqrt(speed_sq);
    const DualScalar v = speed.c[0];

    const Triple<DualJet> w = cross(r1, r2);
    const DualJet w_sq = dot(w, w);
    const double curvature_estimate =
        std::sqrt(std::max(w_sq.c[0].real, 0.0)) / (v.real * v.real * v.real);
    if (curvature_estimate < kCurvatureThreshold) {
        std::ostringstream msg;
        msg << "curvature " << curvature_estimate << " vanishes at s=" << s;
        throw Error(ErrorCode::VanishingCurvature, msg.str());
    }
    const DualJet w_norm = sqrt(w_sq);

    const Triple<DualJet> T = divide(r1, speed);
    const Triple<DualJet> B = divide(w, w_norm);
    const Triple<DualJet> N = cross(B, T);

    FrenetSample out;
    out.s = s;
    out.position = value(position);
    out.T = value(T);
    out.N = value(N);
    out.B = value(B);
    out.speed = v;

    const DualScalar per_arc = inverse(v);
    out.dT = per_arc * rate(T);
    out.dN = per_arc * rate(N);
    out.dB = per_arc * rate(B);

    out.k1 = norm(out.dT);
    out.k2 = dot(out.dN, out.B);
    out.k2_from_binormal = -dot(out.dB, out.N);
    out.k2_closed_form = (dot(w, r3) / w_sq).c[0];

    const DualJet inv_k1 = speed * speed_sq / w_norm;
    out.inv_k1_rate = per_arc * inv_k1.c[1];
    return out;
}

FrenetSample frenet_apparatus(const DualCurve& curve, double s) {
    return frenet_from_jet(jet(curve, s), s);
}

FrenetResiduals frenet_residuals(const FrenetSample& f) {
    FrenetResiduals r;
    r.ode = std::max({max_abs(f.dT - f.k1 * f.N),
                      max_abs(f.dN + f.k1 * f.T - f.k2 * f.B),
                      max_abs(f.dB + f.k2 * f.N)});
    const DualScalar one{1.0, 0.0};
    r.orthonormality = std::max({max_abs(dot(f.T, f.T) - one), max_abs(dot(f.N, f.N) - one),
                                 max_abs(dot(f.B, f.B) - one), max_abs(dot(f.T, f.N)),
                                 max_abs(dot(f.T, f.B)), max_abs(dot(f.N, f.B)),
                                 max_abs(f.B - cross(f.T, f.N))});
    return r;
}

}  // namespace dualgeom
