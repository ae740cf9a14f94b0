#include "geodex/hyp3.hpp"

#include <cmath>

namespace geodex {

const char* errc_name(Errc e) {
    switch (e) {
    case Errc::NearBoundary: return "NearBoundary";
    case Errc::OutsideBall: return "OutsideBall";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::OutsideChartU: return "OutsideChartU";
    case Errc::ReflectedDiagonal: return "ReflectedDiagonal";
    case Errc::ChartMismatch: return "ChartMismatch";
    case Errc::ChartBoundary: return "ChartBoundary";
    case Errc::TranslationCase: return "TranslationCase";
    case Errc::LeavesChart: return "LeavesChart";
    case Errc::ChartExit: return "ChartExit";
    case Errc::StepFailure: return "StepFailure";
    case Errc::DegenerateNormalizer: return "DegenerateNormalizer";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace geodex

namespace geodex::hyp3 {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

UhsPoint::UhsPoint(double t, cplx z) : t_(t), z_(z) {
    if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw GeometryError(Errc::InvalidPoint, "half-space point needs finite t > 0");
}

BallPoint::BallPoint(const Eigen::Vector3d& y) : y_(y) {
    if (!y.allFinite() || !(y.norm() < 1.0))
        throw GeometryError(Errc::OutsideBall, "ball point needs |y| < 1");
}

Eigen::Vector3cd ZVec::real_basis() const {
    return {dt, 0.5 * (dz + dzbar), 0.5 * I * (dzbar - dz)};
}

ZVec ZVec::from_real_basis(const Eigen::Vector3cd& x) {
    return {x[1] + I * x[2], x[1] - I * x[2], x[0]};
}

cplx metric(double t, const ZVec& X, const ZVec& Y) {
    return (0.5 * (X.dz * Y.dzbar + X.dzbar * Y.dz) + X.dt * Y.dt) / (t * t);
}

double hnorm(double t, const ZVec& X) {
    return std::sqrt(std::max(0.0, metric(t, X, X.conj()).real()));
}

Eigen::Vector3cd christoffel(double x0, const Eigen::Vector3cd& X, const Eigen::Vector3cd& Y) {
    const double c = 1.0 / x0;
    return {c * (-X[0] * Y[0] + X[1] * Y[1] + X[2] * Y[2]),
            -c * (X[0] * Y[1] + X[1] * Y[0]),
            -c * (X[0] * Y[2] + X[2] * Y[0])};
}

BallPoint uhs_to_ball(const UhsPoint& p) {
    const double t = p.t();
    const cplx z = p.z();
    const double D = (t + 1.0) * (t + 1.0) + abs2(z);
    return BallPoint(Eigen::Vector3d(2.0 * z.real() / D, 2.0 * z.imag() / D, (t * t + abs2(z) - 1.0) / D));
}

UhsPoint ball_to_uhs(const BallPoint& q) {
    const Eigen::Vector3d& y = q.y();
    const double n = y.norm();
    if (1.0 - n < 1e-14)
        throw GeometryError(Errc::NearBoundary, "ball point too close to the boundary sphere");
    const cplx w(y[0], y[1]);
    const double rho = y[2];
    const double den = abs2(w) + (1.0 - rho) * (1.0 - rho);
    return UhsPoint((1.0 - n * n) / den, 2.0 * w / den);
}

UhsPoint geodesic_point(const GeodesicUhs& g, double r) {
    return UhsPoint(1.0 / (std::abs(g.xi()) * std::cosh(r)), g.eta() + std::tanh(r) / std::conj(g.xi()));
}

UhsPoint vertical_geodesic(double c3, double c4, double r) {
    return UhsPoint(std::exp(r), cplx(c3, c4));
}

GeodesicUhs::GeodesicUhs(cplx xi, cplx eta) : xi_(xi), eta_(eta) {
    if (xi == 0.0 || !std::isfinite(std::abs(xi)) || !std::isfinite(std::abs(eta)))
        throw GeometryError(Errc::OutsideChartU, "chart U needs finite xi != 0");
}

namespace {

double deriv_at(const std::vector<double>& f, std::size_t i, double h) {
    const std::size_t n = f.size();
    if (i >= 2 && i + 2 < n)
        return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    if (n >= 5) {
        // fourth-order one-sided stencils
        if (i == 0) return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
        if (i == 1) return (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
        const std::size_t m = n - 1;
        if (i == m)
            return (25.0 * f[m] - 48.0 * f[m - 1] + 36.0 * f[m - 2] - 16.0 * f[m - 3] + 3.0 * f[m - 4]) / (12.0 * h);
        return (3.0 * f[m] + 10.0 * f[m - 1] - 18.0 * f[m - 2] + 6.0 * f[m - 3] - f[m - 4]) / (12.0 * h);
    }
    if (i >= 1 && i + 1 < n)
        return (f[i + 1] - f[i - 1]) / (2.0 * h);
    if (i == 0)
        return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
}

} // namespace

Integrals conserved_integrals(const std::vector<UhsPoint>& curve, double h) {
    const std::size_t n = curve.size();
    if (n < 3)
        throw GeometryError(Errc::TooFewSamples, "need at least 3 samples");
    std::vector<double> x0(n), x1(n), x2(n);
    for (std::size_t i = 0; i < n; ++i) {
        x0[i] = curve[i].t();
        x1[i] = curve[i].z().real();
        x2[i] = curve[i].z().imag();
    }
    Integrals out;
    out.I1.resize(n);
    out.I2.resize(n);
    out.I3.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d0 = deriv_at(x0, i, h), d1 = deriv_at(x1, i, h), d2 = deriv_at(x2, i, h);
        const double t2 = x0[i] * x0[i];
        out.I1[i] = (d0 * d0 + d1 * d1 + d2 * d2) / t2;
        out.I2[i] = 2.0 * d2 / t2;
        out.I3[i] = 2.0 * d1 / t2;
    }
    return out;
}

NullFrame adapted_null_frame(const GeodesicUhs& g, double r) {
    const cplx xi = g.xi();
    const double ax = std::abs(xi);
    const double ch2 = std::cosh(r) * std::cosh(r);
    NullFrame f;
    f.e0 = {1.0 / (std::conj(xi) * ch2), 1.0 / (xi * ch2), -std::sinh(r) / (ax * ch2)};
    const double s = 1.0 / (kSqrt2 * ch2);
    f.ep = {-s * std::exp(-r) / std::conj(xi), s * std::exp(r) / xi, s / ax};
    f.em = f.ep.conj();
    return f;
}

std::array<ZVec, 2> orthonormal_pair(const NullFrame& f) {
    return {(f.ep + f.em) * (1.0 / kSqrt2), (f.ep - f.em) * (1.0 / (I * kSqrt2))};
}

Eigen::Matrix3cd frame_matrix(const GeodesicUhs& g, double r) {
    const cplx xi = g.xi(), xb = std::conj(xi);
    const double ax = std::abs(xi);
    const double er = std::exp(r), emr = std::exp(-r);
    Eigen::Matrix3cd A;
    A << xi * kSqrt2, xb * kSqrt2, -kSqrt2 * ax * std::sinh(r),
        -xi * emr, xb * er, ax,
        xi * er, -xb * emr, ax;
    return A / (kSqrt2 * ax * ax * std::cosh(r) * std::cosh(r));
}

Eigen::Matrix3cd frame_matrix_inverse(const GeodesicUhs& g, double r) {
    const cplx xi = g.xi(), xb = std::conj(xi);
    const double ax = std::abs(xi);
    const double er = std::exp(r), emr = std::exp(-r);
    Eigen::Matrix3cd B;
    B << xb * kSqrt2, -xb * emr, xb * er,
        xi * kSqrt2, xi * er, -xi * emr,
        -2.0 * kSqrt2 * ax * std::sinh(r), 2.0 * ax, 2.0 * ax;
    return B / (2.0 * kSqrt2);
}

ZVec dphi(const GeodesicUhs& g, double r, const PhiDirection& X) {
    const cplx xi = g.xi(), xb = std::conj(xi);
    const double ax = std::abs(xi);
    const double th = std::tanh(r), ch = std::cosh(r);
    const ZVec dxi{0.0, -th / (xi * xi), -1.0 / (2.0 * xi * ax * ch)};
    const ZVec dxib{-th / (xb * xb), 0.0, -1.0 / (2.0 * xb * ax * ch)};
    const ZVec deta{1.0, 0.0, 0.0};
    const ZVec detab{0.0, 1.0, 0.0};
    const ZVec e0 = adapted_null_frame(g, r).e0;
    return dxi * X.dxi + dxib * X.dxibar + deta * X.deta + detab * X.detabar + e0 * X.dr;
}

cplx jacobi_coefficient(const GeodesicUhs& g, cplx a, cplx b, double r) {
    const cplx xi = g.xi(), xb = std::conj(xi);
    const double er = std::exp(r), emr = std::exp(-r);
    return (-a * er / xi - std::conj(a) * emr / xb - b * xb * emr + std::conj(b) * xi * er) / (2.0 * kSqrt2);
}

ZVec jacobi_field(const GeodesicUhs& g, const PhiDirection& X, double r) {
    const cplx xi = g.xi(), xb = std::conj(xi);
    const double er = std::exp(r), emr = std::exp(-r);
    const double c = 1.0 / (2.0 * kSqrt2);
    const cplx fp = c * (-X.dxi * er / xi - X.dxibar * emr / xb - X.deta * xb * emr + X.detabar * xi * er);
    const cplx fm = c * (-X.dxi * emr / xi - X.dxibar * er / xb + X.deta * xb * er - X.detabar * xi * emr);
    const NullFrame f = adapted_null_frame(g, r);
    return f.ep * fp + f.em * fm;
}

ZVec jacobi_field(const GeodesicUhs& g, cplx a, cplx b, double r) {
    const NullFrame f = adapted_null_frame(g, r);
    const cplx c = jacobi_coefficient(g, a, b, r);
    return f.ep * c + f.em * std::conj(c);
}

ZVec jacobi_field(const GeodesicUhs& g, const LTangent& X, double r) {
    if (X.chart != Chart::XiEta)
        throw GeometryError(Errc::ChartMismatch, "jacobi_field expects a (xi, eta) tangent");
    return jacobi_field(g, X.a, X.b, r);
}

ZVec project_normal(const GeodesicUhs& g, double r, const ZVec& v) {
    const double t = geodesic_point(g, r).t();
    const ZVec e0 = adapted_null_frame(g, r).e0;
    return v - e0 * metric(t, v, e0);
}

} // namespace geodex::hyp3
