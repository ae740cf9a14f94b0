#include "geodex/lspace.hpp"

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "geodex/numdiff.hpp"

namespace geodex::lspace {

SpherePoint::SpherePoint(const Eigen::Vector3d& v) {
    const double n = v.norm();
    if (!v.allFinite() || std::abs(n - 1.0) > 1e-9)
        throw GeometryError(Errc::InvalidPoint, "sphere point must be a unit 3-vector");
    v_ = v / n;
}

SpherePoint SpherePoint::from_homogeneous(cplx a, cplx b) {
    const double s = abs2(a) + abs2(b);
    if (!(s > 0.0) || !std::isfinite(s))
        throw GeometryError(Errc::InvalidPoint, "degenerate homogeneous coordinates");
    const cplx ab = a * std::conj(b);
    return SpherePoint(Eigen::Vector3d(2.0 * ab.real() / s, 2.0 * ab.imag() / s, (abs2(b) - abs2(a)) / s));
}

SpherePoint SpherePoint::from_chart(cplx mu) {
    if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        return infinity();
    return from_homogeneous(mu, 1.0);
}

SpherePoint SpherePoint::infinity() { return SpherePoint(Eigen::Vector3d(0, 0, -1)); }

std::pair<cplx, cplx> SpherePoint::homogeneous() const {
    const double x = v_[0], y = v_[1], z = v_[2];
    if (z >= 0.0)
        return {cplx(x, y), 1.0 + z};
    return {1.0 - z, cplx(x, -y)};
}

std::optional<cplx> SpherePoint::chart() const {
    auto [a, b] = homogeneous();
    if (b == 0.0)
        return std::nullopt;
    return a / b;
}

GeodesicGlobal::GeodesicGlobal(const SpherePoint& mu1, const SpherePoint& mu2) : mu1_(mu1), mu2_(mu2) {
    if ((mu1.vec() + mu2.vec()).norm() < 1e-12)
        throw GeometryError(Errc::ReflectedDiagonal, "past and future endpoints coincide");
}

GeodesicGlobal GeodesicGlobal::from_chart(std::optional<cplx> mu1, std::optional<cplx> mu2) {
    return {mu1 ? SpherePoint::from_chart(*mu1) : SpherePoint::infinity(),
            mu2 ? SpherePoint::from_chart(*mu2) : SpherePoint::infinity()};
}

std::pair<cplx, cplx> GeodesicGlobal::chart_values() const {
    auto m1 = mu1_.chart(), m2 = mu2_.chart();
    if (!m1 || !m2)
        throw GeometryError(Errc::ChartBoundary, "mu chart value is infinite");
    return {*m1, *m2};
}

GeodesicGlobal mu_from_xieta(const GeodesicUhs& g) {
    const cplx xi = g.xi(), eta = g.eta();
    return {SpherePoint::from_chart(-eta + 1.0 / std::conj(xi)),
            SpherePoint::from_homogeneous(xi, xi * std::conj(eta) + 1.0)};
}

GeodesicUhs xieta_from_mu(const GeodesicGlobal& g) {
    auto [a1, b1] = g.mu1().homogeneous();
    auto [a2, b2] = g.mu2().homogeneous();
    const double scale = (std::abs(a1) + std::abs(b1)) * (std::abs(a2) + std::abs(b2));
    if (std::abs(a2) * std::abs(b1) <= 1e-14 * scale)
        throw GeometryError(Errc::OutsideChartU, "geodesic is parallel to the x0 axis");
    const cplx xi = 2.0 * a2 * std::conj(b1) / (std::conj(a1) * a2 + std::conj(b1) * b2);
    const cplx eta = -0.5 * (a1 * std::conj(a2) - b1 * std::conj(b2)) / (b1 * std::conj(a2));
    return {xi, eta};
}

Endpoints endpoints_ball(const GeodesicGlobal& g) {
    return {-g.mu1().vec(), g.mu2().vec()};
}

namespace {

void require(const LTangent& X, Chart c) {
    if (X.chart != c)
        throw GeometryError(Errc::ChartMismatch, "tangent chart does not match the base point chart");
}

// 1/mu2 = conj(eta) + 1/xi
cplx inv_mu2(const GeodesicUhs& g) { return std::conj(g.eta()) + 1.0 / g.xi(); }

cplx kfac(cplx mu1, cplx mu2) {
    const cplx d = 1.0 + mu1 * std::conj(mu2);
    return 1.0 / (d * d);
}

} // namespace

LTangent to_mu_chart(const GeodesicUhs& base, const LTangent& X) {
    require(X, Chart::XiEta);
    const cplx xi = base.xi();
    const cplx q = inv_mu2(base);
    if (std::abs(q * xi) < 1e-14)
        throw GeometryError(Errc::ChartBoundary, "mu2 is infinite at this geodesic");
    const cplx mu2 = 1.0 / q;
    const cplx A = -X.b - std::conj(X.a) / (std::conj(xi) * std::conj(xi));
    const cplx B = -mu2 * mu2 * (std::conj(X.b) - X.a / (xi * xi));
    return {Chart::Mu, A, B};
}

LTangent to_xieta_chart(const GeodesicUhs& base, const LTangent& X) {
    require(X, Chart::Mu);
    const cplx xi = base.xi();
    const cplx q = inv_mu2(base);
    const cplx bq = X.b * q * q;
    const cplx bbar = 0.5 * (-std::conj(X.a) - bq);
    const cplx a = xi * xi * 0.5 * (-std::conj(X.a) + bq);
    return {Chart::XiEta, a, std::conj(bbar)};
}

LTangent apply_J(const GeodesicUhs& base, const LTangent& X) {
    require(X, Chart::XiEta);
    const cplx xi = base.xi(), xb = std::conj(xi);
    return {Chart::XiEta, -I * xi * xi * std::conj(X.b), I * std::conj(X.a) / (xb * xb)};
}

LTangent apply_J(const GeodesicGlobal& base, const LTangent& X) {
    require(X, Chart::Mu);
    base.chart_values();
    return {Chart::Mu, I * X.a, I * X.b};
}

double omega(const GeodesicUhs&, const LTangent& X, const LTangent& Y) {
    require(X, Chart::XiEta);
    require(Y, Chart::XiEta);
    return -0.5 * (X.a * std::conj(Y.b) - Y.a * std::conj(X.b)).real();
}

double omega(const GeodesicGlobal& base, const LTangent& X, const LTangent& Y) {
    require(X, Chart::Mu);
    require(Y, Chart::Mu);
    auto [m1, m2] = base.chart_values();
    return -(kfac(m1, m2) * (X.a * std::conj(Y.b) - Y.a * std::conj(X.b))).real();
}

double metric_G(const GeodesicUhs& base, const LTangent& X, const LTangent& Y) {
    require(X, Chart::XiEta);
    require(Y, Chart::XiEta);
    const cplx xi = base.xi(), xb = std::conj(xi);
    return 0.5 * (X.a * Y.a / (xi * xi) + xb * xb * X.b * Y.b).imag();
}

double metric_G(const GeodesicGlobal& base, const LTangent& X, const LTangent& Y) {
    require(X, Chart::Mu);
    require(Y, Chart::Mu);
    auto [m1, m2] = base.chart_values();
    return (kfac(m1, m2) * (X.a * std::conj(Y.b) + Y.a * std::conj(X.b))).imag();
}

namespace {

const std::array<LTangent, 4> kBasisXiEta{
    LTangent{Chart::XiEta, 1.0, 0.0}, LTangent{Chart::XiEta, I, 0.0},
    LTangent{Chart::XiEta, 0.0, 1.0}, LTangent{Chart::XiEta, 0.0, I}};

} // namespace

Eigen::Matrix4d gram_xieta(const GeodesicUhs& base) {
    // G = -(i/4)(dxi^2/xi^2 - dxibar^2/xibar^2 + xibar^2 deta^2 - xi^2 detabar^2)
    const cplx xi = base.xi(), xb = std::conj(xi);
    Eigen::Matrix4d M;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const LTangent& X = kBasisXiEta[i];
            const LTangent& Y = kBasisXiEta[j];
            const cplx v = -0.25 * I
                * (X.a * Y.a / (xi * xi) - std::conj(X.a) * std::conj(Y.a) / (xb * xb) + xb * xb * X.b * Y.b
                   - xi * xi * std::conj(X.b) * std::conj(Y.b));
            M(i, j) = v.real();
        }
    return M;
}

Eigen::Matrix4d gram_mu(cplx mu1, cplx mu2) {
    const Eigen::Vector4cd u(mu1, std::conj(mu1), mu2, std::conj(mu2));
    const Eigen::Matrix4cd g = complex_metric(u);
    std::array<Eigen::Vector4cd, 4> e;
    const cplx comps[4][2] = {{1.0, 0.0}, {I, 0.0}, {0.0, 1.0}, {0.0, I}};
    for (int i = 0; i < 4; ++i)
        e[i] = Eigen::Vector4cd(comps[i][0], std::conj(comps[i][0]), comps[i][1], std::conj(comps[i][1]));
    Eigen::Matrix4d M;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            M(i, j) = (e[i].transpose() * g * e[j]).value().real();
    return M;
}

std::pair<int, int> signature(const Eigen::Matrix4d& gram) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(0.5 * (gram + gram.transpose()), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double tol = 1e-12 * ev.cwiseAbs().maxCoeff();
    int pos = 0, neg = 0;
    for (int i = 0; i < 4; ++i) {
        if (ev[i] > tol) ++pos;
        else if (ev[i] < -tol) ++neg;
    }
    return {pos, neg};
}

Eigen::Matrix4cd complex_metric(const Eigen::Vector4cd& u) {
    const cplx d1 = 1.0 + u[0] * u[3];
    const cplx d2 = 1.0 + u[1] * u[2];
    const cplx k = 1.0 / (d1 * d1), kt = 1.0 / (d2 * d2);
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    g(0, 3) = g(3, 0) = -0.5 * I * k;
    g(1, 2) = g(2, 1) = 0.5 * I * kt;
    return g;
}

Eigen::Matrix4cd complex_omega(const Eigen::Vector4cd& u) {
    const cplx d1 = 1.0 + u[0] * u[3];
    const cplx d2 = 1.0 + u[1] * u[2];
    const cplx k = 1.0 / (d1 * d1), kt = 1.0 / (d2 * d2);
    Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
    w(0, 3) = -0.5 * k;
    w(3, 0) = 0.5 * k;
    w(1, 2) = -0.5 * kt;
    w(2, 1) = 0.5 * kt;
    return w;
}

cplx riemann_closed_form(cplx mu1, cplx mu2) {
    const cplx d = 1.0 + std::conj(mu1) * mu2;
    return 2.0 / (d * d);
}

namespace {

using Tensor3 = std::array<std::array<std::array<cplx, 4>, 4>, 4>;
using Tensor4 = std::array<Tensor3, 4>;

Eigen::Vector4cd unit(int a) {
    Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
    e[a] = 1.0;
    return e;
}

struct CurvatureNumeric {
    Tensor4 R;  // R^a_{bcd}
    Eigen::Matrix4cd ricci;
    cplx scalar;
    double weyl;
};

CurvatureNumeric numeric_curvature(const Eigen::Vector4cd& u, double rho) {
    auto g_at = [](const Eigen::Vector4cd& v) { return complex_metric(v); };
    auto d1 = [&](auto&& f, const Eigen::Vector4cd& v, int c) {
        return numdiff::contour([&](cplx w) { return f(v + (w - v[c]) * unit(c)); }, v[c], rho);
    };

    std::array<Eigen::Matrix4cd, 4> dg;
    std::array<std::array<Eigen::Matrix4cd, 4>, 4> ddg;
    for (int c = 0; c < 4; ++c) {
        dg[c] = d1(g_at, u, c);
        for (int e = 0; e < 4; ++e)
            ddg[e][c] = d1([&](const Eigen::Vector4cd& v) { return d1(g_at, v, c); }, u, e);
    }
    const Eigen::Matrix4cd g = complex_metric(u);
    const Eigen::Matrix4cd gi = g.inverse();

    Tensor3 Gl{}, G{};  // Gamma_{d,bc}, Gamma^a_{bc}
    for (int d = 0; d < 4; ++d)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                Gl[d][b][c] = 0.5 * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                cplx s = 0;
                for (int d = 0; d < 4; ++d) s += gi(a, d) * Gl[d][b][c];
                G[a][b][c] = s;
            }
    Tensor4 dG{};  // d_e Gamma^a_{bc}
    for (int e = 0; e < 4; ++e) {
        const Eigen::Matrix4cd dgi = -gi * dg[e] * gi;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    cplx s = 0;
                    for (int d = 0; d < 4; ++d) {
                        const cplx dGl = 0.5 * (ddg[e][b](d, c) + ddg[e][c](d, b) - ddg[e][d](b, c));
                        s += dgi(a, d) * Gl[d][b][c] + gi(a, d) * dGl;
                    }
                    dG[e][a][b][c] = s;
                }
    }
    CurvatureNumeric out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    cplx s = dG[c][a][d][b] - dG[d][a][c][b];
                    for (int e = 0; e < 4; ++e) s += G[a][c][e] * G[e][d][b] - G[a][d][e] * G[e][c][b];
                    out.R[a][b][c][d] = s;
                }
    out.ricci = Eigen::Matrix4cd::Zero();
    for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d)
            for (int a = 0; a < 4; ++a) out.ricci(b, d) += out.R[a][b][a][d];
    out.scalar = 0;
    for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d) out.scalar += gi(b, d) * out.ricci(b, d);

    double w2 = 0;
    const Eigen::Matrix4cd& Ric = out.ricci;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    cplx Rl = 0;
                    for (int e = 0; e < 4; ++e) Rl += g(a, e) * out.R[e][b][c][d];
                    cplx W = Rl
                        - 0.5 * (g(a, c) * Ric(b, d) - g(a, d) * Ric(b, c) - g(b, c) * Ric(a, d) + g(b, d) * Ric(a, c))
                        + out.scalar / 6.0 * (g(a, c) * g(b, d) - g(a, d) * g(b, c));
                    w2 += std::norm(W);
                }
    out.weyl = std::sqrt(w2);
    return out;
}

} // namespace

CurvatureReport curvature_at(const GeodesicGlobal& base) {
    auto [m1, m2] = base.chart_values();
    CurvatureReport rep;
    rep.riemann_nonzero = riemann_closed_form(m1, m2);
    const Eigen::Vector4cd u(m1, std::conj(m1), m2, std::conj(m2));
    const double rho = 0.05 * std::min(1.0, std::abs(1.0 + m1 * std::conj(m2))) / (1.0 + std::abs(m1) + std::abs(m2));
    const CurvatureNumeric num = numeric_curvature(u, rho);
    // R^{mu2}_{mu2 mu2 mu1bar}; coordinates ordered (mu1, mu1bar, mu2, mu2bar)
    rep.riemann_numeric = num.R[2][2][2][1];
    rep.scalar = num.scalar.real();
    rep.scalar_imag = num.scalar.imag();
    rep.weyl_norm = num.weyl;
    rep.signature = signature(gram_mu(m1, m2));
    return rep;
}

} // namespace geodex::lspace
