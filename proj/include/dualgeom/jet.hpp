#pragma once

#include <array>
#include <cmath>
#include <concepts>

#include "dualgeom/dual_scalar.hpp"
#include "dualgeom/dual_vector.hpp"

namespace dualgeom {

/// Truncated Taylor expansion f(t0 + h) = Σ c[k] h^k, k <= 4, over a coefficient ring T
/// (double or DualScalar). Arithmetic propagates exact derivatives up to fourth order.
template <class T>
class Jet {
public:
    static constexpr int kOrder = 4;
    static constexpr int kSize = kOrder + 1;

    std::array<T, kSize> c{};

    Jet() = default;
    template <class U>
        requires std::convertible_to<U, T>
    Jet(const U& constant) {  // NOLINT: constants embed implicitly
        c[0] = T(constant);
    }

    /// The identity map t ↦ t expanded at t0.
    static Jet variable(const T& t0) {
        Jet j;
        j.c[0] = t0;
        j.c[1] = T(1.0);
        return j;
    }

    const T& value() const { return c[0]; }

    /// k-th derivative, k!·c[k].
    T derivative(int k) const {
        double factorial = 1.0;
        for (int i = 2; i <= k; ++i) factorial *= i;
        return c[k] * T(factorial);
    }

    Jet& operator+=(const Jet& o) {
        for (int k = 0; k < kSize; ++k) c[k] += o.c[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k < kSize; ++k) c[k] -= o.c[k];
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(const Jet& a) {
        Jet r;
        for (int k = 0; k < kSize; ++k) r.c[k] = -a.c[k];
        return r;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k < kSize; ++k) {
            T sum{};
            for (int j = 0; j <= k; ++j) sum += a.c[j] * b.c[k - j];
            r.c[k] = sum;
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet q;
        for (int k = 0; k < kSize; ++k) {
            T sum = a.c[k];
            for (int j = 1; j <= k; ++j) sum -= b.c[j] * q.c[k - j];
            q.c[k] = sum / b.c[0];
        }
        return q;
    }

    friend Jet sqrt(const Jet& a) {
        using std::sqrt;
        Jet r;
        r.c[0] = sqrt(a.c[0]);
        const T twice_root = T(2.0) * r.c[0];
        for (int k = 1; k < kSize; ++k) {
            T sum = a.c[k];
            for (int j = 1; j < k; ++j) sum -= r.c[j] * r.c[k - j];
            r.c[k] = sum / twice_root;
        }
        return r;
    }

    friend Jet exp(const Jet& a) {
        using std::exp;
        Jet e;
        e.c[0] = exp(a.c[0]);
        for (int k = 1; k < kSize; ++k) {
            T sum{};
            for (int j = 1; j <= k; ++j) sum += T(double(j) / k) * a.c[j] * e.c[k - j];
            e.c[k] = sum;
        }
        return e;
    }

    friend Jet sin(const Jet& a) { return sin_cos(a)[0]; }
    friend Jet cos(const Jet& a) { return sin_cos(a)[1]; }

private:
    static std::array<Jet, 2> sin_cos(const Jet& a) {
        using std::cos;
        using std::sin;
        Jet s, co;
        s.c[0] = sin(a.c[0]);
        co.c[0] = cos(a.c[0]);
        for (int k = 1; k < kSize; ++k) {
            T ss{}, cc{};
            for (int j = 1; j <= k; ++j) {
                const T w = T(double(j) / k) * a.c[j];
                ss += w * co.c[k - j];
                cc -= w * s.c[k - j];
            }
            s.c[k] = ss;
            co.c[k] = cc;
        }
        return {s, co};
    }
};

using DualJet = Jet<DualScalar>;
using RealJet = Jet<double>;

inline DualJet promote(const RealJet& j) {
    DualJet r;
    for (int k = 0; k < RealJet::kSize; ++k) r.c[k] = DualScalar(j.c[k]);
    return r;
}

/// Three scalars of any ring; used to write curve formulas once for plain evaluation and jets.
template <class S>
using Triple = std::array<S, 3>;

template <class S>
S dot(const Triple<S>& x, const Triple<S>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

template <class S>
Triple<S> cross(const Triple<S>& x, const Triple<S>& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

template <class S>
Triple<S> scale(const S& s, const Triple<S>& v) {
    return {s * v[0], s * v[1], s * v[2]};
}

template <class S>
Triple<S> operator+(const Triple<S>& x, const Triple<S>& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

template <class S>
Triple<S> operator-(const Triple<S>& x, const Triple<S>& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

inline DualVec3 to_dual_vec(const Triple<DualScalar>& t) {
    DualVec3 v;
    for (int i = 0; i < 3; ++i) v.set(i, t[i]);
    return v;
}

inline Triple<DualScalar> to_triple(const DualVec3& v) { return {v[0], v[1], v[2]}; }

/// k-th derivative of a vector jet.
inline DualVec3 derivative(const Triple<DualJet>& j, int k) {
    return to_dual_vec({j[0].derivative(k), j[1].derivative(k), j[2].derivative(k)});
}

}  // namespace dualgeom
