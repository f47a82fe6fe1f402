#pragma once

#include <random>

#include <doctest.h>

#include "dualgeom/curves.hpp"
#include "dualgeom/dual_scalar.hpp"
#include "dualgeom/dual_vector.hpp"
#include "dualgeom/error.hpp"

namespace testing {

using namespace dualgeom;

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20261017);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline DualScalar random_dual(double scale = 10.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

inline Vec3 random_vec(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }

inline DualVec3 random_dual_vec(double scale = 1.0) { return {random_vec(scale), random_vec(scale)}; }

// Smooth random series with a nonzero dual part; one low-frequency trig term per coordinate
// plus a linear and quadratic drift.
inline SeriesDefinition random_series() {
    SeriesDefinition series;
    for (int i = 0; i < 3; ++i) {
        auto& r = series.real[i];
        r.poly = {uniform(-1, 1) + (i == 0 ? 2.0 : 0.0), uniform(-0.5, 0.5), uniform(-0.3, 0.3)};
        r.trig = {{uniform(-1, 1), uniform(-1, 1), uniform(1.0, 2.5)}};
        auto& d = series.dual[i];
        d.poly = {uniform(-1, 1), uniform(-0.5, 0.5)};
        d.trig = {{uniform(-0.5, 0.5), uniform(-0.5, 0.5), uniform(0.5, 2.0)}};
    }
    return series;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

// Asserts the expression throws dualgeom::Error with the given code.
#define CHECK_THROWS_CODE(expr, expected)                               \
    do {                                                                \
        bool caught_ = false;                                           \
        try {                                                           \
            (void)(expr);                                               \
        } catch (const dualgeom::Error& e) {                            \
            caught_ = true;                                             \
            CHECK_MESSAGE(e.code() == (expected), e.what());            \
        }                                                               \
        CHECK_MESSAGE(caught_, "expected an error from " #expr);        \
    } while (0)

}  // namespace testing
