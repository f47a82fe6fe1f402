#pragma once

#include <cstddef>
#include <functional>

#include "dualgeom/dual_scalar.hpp"

namespace dualgeom {

struct QuadratureOptions {
    double abs_tol = 1e-10;                    // per part
    std::size_t max_subdivisions = 1u << 20;
};

/// Adaptive Simpson quadrature of a dual-valued integrand; real and dual parts must each meet
/// the tolerance. b < a integrates with reversed sign; a == b gives 0+ε0.
/// Throws QuadratureNonConvergence when the subdivision budget runs out.
DualScalar integrate_dual(const std::function<DualScalar(double)>& f, double a, double b,
                          const QuadratureOptions& options = {});

}  // namespace dualgeom
