#pragma once

#include <array>

#include "geodex/hyp3.hpp"
#include "geodex/lspace.hpp"

namespace geodex::isometry {

using hyp3::GeodesicUhs;
using hyp3::Tangent3;
using hyp3::UhsPoint;
using lspace::GeodesicGlobal;

struct HypKilling {
    cplx alpha{}, beta{}, gamma{};
};

struct LKilling {
    cplx c1{}, c2{}, c3{};
};

struct FlowAux {
    cplx tau;
    cplx gamma1;
};

// K = Re[t(gamma + 2 alpha zbar) d/dt + 2(beta + gamma z - alpha t^2 + conj(alpha) z^2) d/dz],
// Re taken as (X + conj X)/2.
Tangent3 hyp_killing_vector(const HypKilling& k, const UhsPoint& p);

LTangent l_killing_vector(const LKilling& k, cplx mu1, cplx mu2);
LTangent l_killing_vector(const LKilling& k, const GeodesicGlobal& base);

// Both roots of conj(alpha) tau^2 + gamma tau + beta = 0 (equal when alpha == 0).
std::array<cplx, 2> tau_roots(const HypKilling& k);
FlowAux flow_aux(const HypKilling& k);

UhsPoint hyp_flow(const HypKilling& k, const UhsPoint& p, double s);
// Same flow evaluated through a caller-chosen root tau.
UhsPoint hyp_flow_with_root(const HypKilling& k, const UhsPoint& p, double s, cplx tau);

GeodesicUhs l_action(const HypKilling& k, const GeodesicUhs& g, double s);
// hyp_flow(Phi(xi, eta, r)) = Phi(l_action(xi, eta), r + shift)
double l_action_r_shift(const HypKilling& k, const GeodesicUhs& g, double s);

LKilling induced_killing(const HypKilling& k);

} // namespace geodex::isometry
