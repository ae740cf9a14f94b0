#pragma once

#include "geodex/common.hpp"

namespace geodex {

enum class Chart { XiEta, Mu };

// Real tangent vector to L(H^3): a d/du1 + b d/du2 + conjugates, where (u1, u2)
// is (xi, eta) or (mu1, mu2) depending on the chart tag.
struct LTangent {
    Chart chart = Chart::XiEta;
    cplx a{}, b{};

    LTangent operator+(const LTangent& o) const { return {chart, a + o.a, b + o.b}; }
    LTangent operator*(double s) const { return {chart, a * s, b * s}; }
};

} // namespace geodex
