#pragma once

#include <cmath>
#include <numbers>

#include "geodex/common.hpp"

namespace geodex::numdiff {

// Evaluates Eigen expression templates; passes scalars through.
template <class X>
auto materialize(X&& x) {
    if constexpr (requires { x.eval(); })
        return x.eval();
    else
        return x;
}

// Central difference, O(h^2).
template <class F>
auto central(F&& f, double x, double h) {
    return materialize((f(x + h) - f(x - h)) * (1.0 / (2.0 * h)));
}

// Five-point first derivative, O(h^4).
template <class F>
auto central4(F&& f, double x, double h) {
    return materialize((f(x - 2 * h) - f(x - h) * 8.0 + f(x + h) * 8.0 - f(x + 2 * h)) * (1.0 / (12.0 * h)));
}

// Five-point second derivative, O(h^4).
template <class F>
auto second4(F&& f, double x, double h) {
    return materialize((f(x - 2 * h) * -1.0 + f(x - h) * 16.0 - f(x) * 30.0 + f(x + h) * 16.0 - f(x + 2 * h))
                       * (1.0 / (12.0 * h * h)));
}

// First derivative of a holomorphic function of one complex variable via the
// trapezoid rule on the circle |w - z| = radius (Cauchy integral formula).
template <class F>
auto contour(F&& f, cplx z, double radius, int nodes = 24) {
    const double two_pi = 2.0 * std::numbers::pi;
    auto sum = materialize(f(z + radius) * cplx(1.0));
    for (int k = 1; k < nodes; ++k) {
        const cplx w = std::polar(1.0, two_pi * k / nodes);
        sum += f(z + radius * w) * std::conj(w);
    }
    return materialize(sum * cplx(1.0 / (nodes * radius)));
}

} // namespace geodex::numdiff
