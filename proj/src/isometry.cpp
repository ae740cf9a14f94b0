#include "geodex/isometry.hpp"

#include <cmath>

namespace geodex::isometry {

Tangent3 hyp_killing_vector(const HypKilling& k, const UhsPoint& p) {
    const double t = p.t();
    const cplx z = p.z();
    const cplx v = k.beta + k.gamma * z - k.alpha * t * t + std::conj(k.alpha) * z * z;
    const double u = t * (k.gamma + 2.0 * k.alpha * std::conj(z)).real();
    return {p, v, u};
}

LTangent l_killing_vector(const LKilling& k, cplx mu1, cplx mu2) {
    return {Chart::Mu, k.c1 + k.c2 * mu1 + k.c3 * mu1 * mu1,
            std::conj(k.c3) - std::conj(k.c2) * mu2 + std::conj(k.c1) * mu2 * mu2};
}

LTangent l_killing_vector(const LKilling& k, const GeodesicGlobal& base) {
    auto [m1, m2] = base.chart_values();
    return l_killing_vector(k, m1, m2);
}

std::array<cplx, 2> tau_roots(const HypKilling& k) {
    const cplx ab = std::conj(k.alpha);
    if (k.alpha == 0.0) {
        if (k.gamma == 0.0)
            throw GeometryError(Errc::TranslationCase, "alpha = gamma = 0");
        const cplx t = -k.beta / k.gamma;
        return {t, t};
    }
    const cplx D = std::sqrt(k.gamma * k.gamma - 4.0 * ab * k.beta);
    const cplx s = (std::conj(k.gamma) * D).real() >= 0.0 ? k.gamma + D : k.gamma - D;
    const cplx q = -0.5 * s;
    if (q == 0.0)
        return {0.0, 0.0};
    return {q / ab, k.beta / q};
}

FlowAux flow_aux(const HypKilling& k) {
    if (k.alpha == 0.0 && k.gamma == 0.0)
        throw GeometryError(Errc::TranslationCase, "alpha = gamma = 0");
    auto [r1, r2] = tau_roots(k);
    cplx tau = r1;
    const double a1 = std::abs(r1), a2 = std::abs(r2);
    if (std::abs(a1 - a2) <= 1e-15 * std::max(a1, a2)) {
        if (r2.real() > r1.real()) tau = r2;
    } else if (a2 < a1) {
        tau = r2;
    }
    return {tau, k.gamma + 2.0 * std::conj(k.alpha) * tau};
}

namespace {

// (e^{g s} - 1)/g, series near the removable singularity
cplx exp_ratio(cplx g, double s) {
    const cplx x = g * s;
    if (std::abs(x) < 1e-4)
        return s * (1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0);
    return (std::exp(x) - 1.0) / g;
}

UhsPoint flow_impl(const HypKilling& k, const UhsPoint& p, double s, cplx tau) {
    const cplx g1 = k.gamma + 2.0 * std::conj(k.alpha) * tau;
    const double t0 = p.t();
    const cplx z0 = p.z();
    const double Lam = abs2(z0 - tau) + t0 * t0;
    const cplx lam = std::conj(k.alpha) * exp_ratio(g1, s);
    const double Dn = abs2(std::conj(z0) - std::conj(tau) - lam * Lam) + t0 * t0;
    const double t = t0 * Lam / Dn * std::exp(g1.real() * s);
    const cplx z = (z0 - tau - std::conj(lam) * Lam) / Dn * Lam * std::exp(g1 * s) + tau;
    return {t, z};
}

struct Brackets {
    cplx lam, p1, p2, g1, tau;
};

Brackets brackets(const HypKilling& k, const GeodesicUhs& g, double s) {
    const FlowAux aux = flow_aux(k);
    const cplx lam = std::conj(k.alpha) * exp_ratio(aux.gamma1, s);
    const cplx ixb = 1.0 / std::conj(g.xi());
    const cplx e = g.eta() - aux.tau;
    return {lam, lam * (e + ixb) - 1.0, lam * (e - ixb) - 1.0, aux.gamma1, aux.tau};
}

} // namespace

UhsPoint hyp_flow(const HypKilling& k, const UhsPoint& p, double s) {
    if (k.alpha == 0.0 && k.gamma == 0.0)
        return {p.t(), p.z() + k.beta * s};
    return flow_impl(k, p, s, flow_aux(k).tau);
}

UhsPoint hyp_flow_with_root(const HypKilling& k, const UhsPoint& p, double s, cplx tau) {
    if (k.alpha == 0.0 && k.gamma == 0.0)
        return {p.t(), p.z() + k.beta * s};
    return flow_impl(k, p, s, tau);
}

GeodesicUhs l_action(const HypKilling& k, const GeodesicUhs& g, double s) {
    if (k.alpha == 0.0 && k.gamma == 0.0)
        return {g.xi(), g.eta() + k.beta * s};
    const Brackets b = brackets(k, g, s);
    const cplx prod = b.p1 * b.p2;
    if (std::abs(prod) < 1e-12)
        throw GeometryError(Errc::LeavesChart, "image geodesic is parallel to the x0 axis");
    const cplx ixb = 1.0 / std::conj(g.xi());
    const cplx e = g.eta() - b.tau;
    const cplx xi = g.xi() * std::exp(-std::conj(b.g1) * s) * std::conj(prod);
    const cplx eta = (e - b.lam * (e + ixb) * (e - ixb)) / prod * std::exp(b.g1 * s) + b.tau;
    if (!(std::abs(eta) < 1e12) || xi == 0.0)
        throw GeometryError(Errc::LeavesChart, "image geodesic is parallel to the x0 axis");
    return {xi, eta};
}

double l_action_r_shift(const HypKilling& k, const GeodesicUhs& g, double s) {
    if (k.alpha == 0.0 && k.gamma == 0.0)
        return 0.0;
    const Brackets b = brackets(k, g, s);
    return std::log(std::abs(b.p1) / std::abs(b.p2));
}

LKilling induced_killing(const HypKilling& k) {
    return {-k.beta, k.gamma, -std::conj(k.alpha)};
}

} // namespace geodex::isometry
