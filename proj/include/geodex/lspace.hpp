#pragma once

#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "geodex/hyp3.hpp"
#include "geodex/ltangent.hpp"

namespace geodex::lspace {

using hyp3::GeodesicUhs;

// Point of the Riemann sphere as a unit 3-vector. Chart value mu = (x + iy)/(1 + z);
// infinity sits at (0, 0, -1).
class SpherePoint {
public:
    explicit SpherePoint(const Eigen::Vector3d& v);
    static SpherePoint from_chart(cplx mu);
    static SpherePoint infinity();
    // point for mu = a/b, (a, b) not both zero
    static SpherePoint from_homogeneous(cplx a, cplx b);

    const Eigen::Vector3d& vec() const { return v_; }
    std::optional<cplx> chart() const;
    bool is_infinity() const { return !chart().has_value(); }
    // (a, b) with mu = a/b, both bounded by 2 in modulus
    std::pair<cplx, cplx> homogeneous() const;
    SpherePoint antipode() const { return SpherePoint(-v_); }

private:
    Eigen::Vector3d v_;
};

// Oriented geodesic via (mu1, mu2); mu1 stored through the same stereographic map
// as mu2, so the past endpoint is the antipode of mu1's sphere point.
class GeodesicGlobal {
public:
    GeodesicGlobal(const SpherePoint& mu1, const SpherePoint& mu2);
    // nullopt means infinity
    static GeodesicGlobal from_chart(std::optional<cplx> mu1, std::optional<cplx> mu2);

    const SpherePoint& mu1() const { return mu1_; }
    const SpherePoint& mu2() const { return mu2_; }
    // both chart values; ChartBoundary when either is infinite
    std::pair<cplx, cplx> chart_values() const;

private:
    SpherePoint mu1_, mu2_;
};

struct Endpoints {
    Eigen::Vector3d past, future;
};

struct CurvatureReport {
    cplx riemann_nonzero;  // closed form 2/(1 + conj(mu1) mu2)^2
    cplx riemann_numeric;  // same component from contour-differenced Christoffels
    double scalar = 0.0;       // real part of the numeric scalar curvature
    double scalar_imag = 0.0;  // imaginary residue, zero up to rounding
    double weyl_norm = 0.0;
    std::pair<int, int> signature{0, 0};
};

GeodesicGlobal mu_from_xieta(const GeodesicUhs& g);
GeodesicUhs xieta_from_mu(const GeodesicGlobal& g);
Endpoints endpoints_ball(const GeodesicGlobal& g);

// chart Jacobians at the base geodesic
LTangent to_mu_chart(const GeodesicUhs& base, const LTangent& X);
LTangent to_xieta_chart(const GeodesicUhs& base, const LTangent& X);

LTangent apply_J(const GeodesicUhs& base, const LTangent& X);
LTangent apply_J(const GeodesicGlobal& base, const LTangent& X);

double omega(const GeodesicUhs& base, const LTangent& X, const LTangent& Y);
double omega(const GeodesicGlobal& base, const LTangent& X, const LTangent& Y);

double metric_G(const GeodesicUhs& base, const LTangent& X, const LTangent& Y);
double metric_G(const GeodesicGlobal& base, const LTangent& X, const LTangent& Y);

// Tensor form of G on the real basis {a=1, a=i, b=1, b=i}; a check on the quadratic-form path.
Eigen::Matrix4d gram_xieta(const GeodesicUhs& base);
Eigen::Matrix4d gram_mu(cplx mu1, cplx mu2);
std::pair<int, int> signature(const Eigen::Matrix4d& gram);

// Components g_ij of G in holomorphic coordinates (mu1, mu1bar, mu2, mu2bar),
// treated as four independent complex variables.
Eigen::Matrix4cd complex_metric(const Eigen::Vector4cd& u);
// Omega_ij in the same coordinates.
Eigen::Matrix4cd complex_omega(const Eigen::Vector4cd& u);

cplx riemann_closed_form(cplx mu1, cplx mu2);
CurvatureReport curvature_at(const GeodesicGlobal& base);

} // namespace geodex::lspace
