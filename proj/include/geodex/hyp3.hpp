#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "geodex/common.hpp"
#include "geodex/ltangent.hpp"

namespace geodex::hyp3 {

// Upper half-space point: height t = x0 > 0, z = x1 + i x2.
class UhsPoint {
public:
    UhsPoint(double t, cplx z);
    double t() const { return t_; }
    cplx z() const { return z_; }
    // (x0, x1, x2)
    Eigen::Vector3d coords() const { return {t_, z_.real(), z_.imag()}; }
    static UhsPoint from_coords(const Eigen::Vector3d& x) { return {x[0], cplx(x[1], x[2])}; }

private:
    double t_;
    cplx z_;
};

class BallPoint {
public:
    explicit BallPoint(const Eigen::Vector3d& y);
    const Eigen::Vector3d& y() const { return y_; }

private:
    Eigen::Vector3d y_;
};

// Complexified tangent vector, coefficients on (d/dz, d/dzbar, d/dt).
struct ZVec {
    cplx dz{}, dzbar{}, dt{};

    ZVec operator+(const ZVec& o) const { return {dz + o.dz, dzbar + o.dzbar, dt + o.dt}; }
    ZVec operator-(const ZVec& o) const { return {dz - o.dz, dzbar - o.dzbar, dt - o.dt}; }
    ZVec operator*(cplx s) const { return {dz * s, dzbar * s, dt * s}; }
    ZVec conj() const { return {std::conj(dzbar), std::conj(dz), std::conj(dt)}; }

    // components on (d/dx0, d/dx1, d/dx2)
    Eigen::Vector3cd real_basis() const;
    static ZVec from_real_basis(const Eigen::Vector3cd& x);
};

inline ZVec operator*(cplx s, const ZVec& v) { return v * s; }

// Real tangent vector v d/dz + conj(v) d/dzbar + u d/dt at base.
struct Tangent3 {
    UhsPoint base;
    cplx v;
    double u;

    ZVec complexified() const { return {v, std::conj(v), u}; }
};

// Oriented geodesic in chart U (not parallel to the x0 axis).
class GeodesicUhs {
public:
    GeodesicUhs(cplx xi, cplx eta);
    cplx xi() const { return xi_; }
    cplx eta() const { return eta_; }

private:
    cplx xi_, eta_;
};

struct NullFrame {
    ZVec e0, ep, em;
};

// Tangent direction on U x R, split into holomorphic and antiholomorphic parts.
struct PhiDirection {
    cplx dxi{}, dxibar{}, deta{}, detabar{};
    double dr = 0.0;

    static PhiDirection real(cplx a, cplx b, double dr = 0.0) {
        return {a, std::conj(a), b, std::conj(b), dr};
    }
};

// Metric of H^3 at height t, complex bilinear on complexified vectors.
cplx metric(double t, const ZVec& X, const ZVec& Y);
// Hermitian norm sqrt(g(X, conj X)).
double hnorm(double t, const ZVec& X);

// Gamma^k_ij X^i Y^j in the real basis (x0, x1, x2) at height x0.
Eigen::Vector3cd christoffel(double x0, const Eigen::Vector3cd& X, const Eigen::Vector3cd& Y);

BallPoint uhs_to_ball(const UhsPoint& p);
UhsPoint ball_to_uhs(const BallPoint& q);

UhsPoint geodesic_point(const GeodesicUhs& g, double r);
UhsPoint vertical_geodesic(double c3, double c4, double r);

struct Integrals {
    std::vector<double> I1, I2, I3;
};

// First integrals along a path sampled at uniform parameter step h.
Integrals conserved_integrals(const std::vector<UhsPoint>& curve, double h);

NullFrame adapted_null_frame(const GeodesicUhs& g, double r);
// Orthonormal pair e1, e2 with e+ = (e1 + i e2)/sqrt2.
std::array<ZVec, 2> orthonormal_pair(const NullFrame& f);

// Rows express (e0, e+, e-) on (d/dz, d/dzbar, d/dt).
Eigen::Matrix3cd frame_matrix(const GeodesicUhs& g, double r);
// Rows express (d/dz, d/dzbar, d/dt) on (e0, e+, e-).
Eigen::Matrix3cd frame_matrix_inverse(const GeodesicUhs& g, double r);

ZVec dphi(const GeodesicUhs& g, double r, const PhiDirection& X);

// h(X) = f e+ + conj(f) e- for the real tangent (a, b) in the (xi, eta) chart.
cplx jacobi_coefficient(const GeodesicUhs& g, cplx a, cplx b, double r);
// Complex-linear h on (d/dxi, d/dxibar, d/deta, d/detabar) components; dr is ignored.
ZVec jacobi_field(const GeodesicUhs& g, const PhiDirection& X, double r);
ZVec jacobi_field(const GeodesicUhs& g, cplx a, cplx b, double r);
ZVec jacobi_field(const GeodesicUhs& g, const LTangent& X, double r);

// Orthogonal projection onto the normal plane of the geodesic at r.
ZVec project_normal(const GeodesicUhs& g, double r, const ZVec& v);

} // namespace geodex::hyp3
