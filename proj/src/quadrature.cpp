#include "dualgeom/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "dualgeom/error.hpp"

namespace dualgeom {

namespace {

// Subintervals above this depth may not stop early, so periodic integrands sampled on their
// zeros are not accepted prematurely.
constexpr int kMinDepth = 3;

struct Segment {
    double a, b;
    DualScalar fa, fm, fb;
    DualScalar whole;
    double tol;
    int depth;
};

DualScalar simpson(double a, double b, const DualScalar& fa, const DualScalar& fm,
                   const DualScalar& fb) {
    return DualScalar((b - a) / 6.0) * (fa + DualScalar(4.0) * fm + fb);
}

}  // namespace

DualScalar integrate_dual(const std::function<DualScalar(double)>& f, double a, double b,
                          const QuadratureOptions& options) {
    if (a == b) return {0.0, 0.0};
    if (b < a) return -integrate_dual(f, b, a, options);

    const double m = 0.5 * (a + b);
    const DualScalar fa = f(a), fm = f(m), fb = f(b);
    std::vector<Segment> stack{{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), options.abs_tol, 0}};

    DualScalar total{0.0, 0.0};
    std::size_t subdivisions = 0;
    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();

        const double mid = 0.5 * (seg.a + seg.b);
        const double left_mid = 0.5 * (seg.a + mid);
        const double right_mid = 0.5 * (mid + seg.b);
        const DualScalar f_lm = f(left_mid);
        const DualScalar f_rm = f(right_mid);
        const DualScalar left = simpson(seg.a, mid, seg.fa, f_lm, seg.fm);
        const DualScalar right = simpson(mid, seg.b, seg.fm, f_rm, seg.fb);
        const DualScalar delta = left + right - seg.whole;
        if (!std::isfinite(delta.real) || !std::isfinite(delta.dual)) {
            std::ostringstream msg;
            msg << "integrand is not finite near t=" << mid;
            throw Error(ErrorCode::QuadratureNonConvergence, msg.str());
        }

        if (seg.depth >= kMinDepth && std::abs(delta.real) <= 15.0 * seg.tol &&
            std::abs(delta.dual) <= 15.0 * seg.tol) {
            total += left + right + DualScalar(1.0 / 15.0) * delta;
            continue;
        }
        if (++subdivisions > options.max_subdivisions) {
            std::ostringstream msg;
            msg << "adaptive Simpson exceeded " << options.max_subdivisions
                << " subdivisions on [" << a << ", " << b << "]";
            throw Error(ErrorCode::QuadratureNonConvergence, msg.str());
        }
        stack.push_back({mid, seg.b, seg.fm, f_rm, seg.fb, right, seg.tol / 2, seg.depth + 1});
        stack.push_back({seg.a, mid, seg.fa, f_lm, seg.fm, left, seg.tol / 2, seg.depth + 1});
    }
    return total;
}

}  // namespace dualgeom
