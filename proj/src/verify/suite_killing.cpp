#include <cmath>
#include <functional>
#include <vector>

#include "geodex/isometry.hpp"
#include "geodex/numdiff.hpp"
#include "util.hpp"

namespace geodex::verify {

using namespace isometry;
using detail::rel;

namespace {

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;
template <int N>
using Mat = Eigen::Matrix<double, N, N>;

// (L_K g)_ij = K^k d_k g_ij + g_kj d_i K^k + g_ik d_j K^k, every derivative by central differences.
template <int N>
Mat<N> lie_derivative(const std::function<Mat<N>(const Vec<N>&)>& g, const std::function<Vec<N>(const Vec<N>&)>& K,
                      const Vec<N>& x, double h) {
    std::array<Mat<N>, N> dg;
    Mat<N> dK;  // dK(k, i) = d_i K^k
    for (int i = 0; i < N; ++i) {
        const Vec<N> e = Vec<N>::Unit(i);
        dg[i] = numdiff::central([&](double s) { return g(x + s * e); }, 0.0, h);
        dK.col(i) = numdiff::central([&](double s) { return K(x + s * e); }, 0.0, h);
    }
    const Mat<N> g0 = g(x);
    const Vec<N> k0 = K(x);
    Mat<N> L = Mat<N>::Zero();
    for (int k = 0; k < N; ++k) L += k0[k] * dg[k];
    L += dK.transpose() * g0 + g0 * dK;
    return L;
}

Mat<3> uhs_metric(const Vec<3>& x) { return Mat<3>::Identity() / (x[0] * x[0]); }

Vec<3> hyp_field(const HypKilling& k, const Vec<3>& x) {
    const hyp3::Tangent3 v = hyp_killing_vector(k, UhsPoint::from_coords(x));
    return {v.u, v.v.real(), v.v.imag()};
}

Mat<4> G_metric(const Vec<4>& x) {
    const GeodesicGlobal g = GeodesicGlobal::from_chart(cplx(x[0], x[1]), cplx(x[2], x[3]));
    Mat<4> M;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            M(a, b) = lspace::metric_G(g, detail::ltangent(Chart::Mu, Vec<4>::Unit(a)),
                                       detail::ltangent(Chart::Mu, Vec<4>::Unit(b)));
    return M;
}

HypKilling random_hyp(Sampler& rng) { return {rng.square(1.0), rng.square(1.0), rng.square(1.0)}; }

void lie_derivatives(Recorder& rec, Sampler& rng) {
    const int sets = 20, pts = 50;
    double worst_g = 0.0, worst_G = 0.0;
    for (int s = 0; s < sets; ++s) {
        const HypKilling k = random_hyp(rng);
        for (int p = 0; p < pts; ++p) {
            const Vec<3> x(rng.uniform(0.5, 2.0), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const Mat<3> L = lie_derivative<3>(uhs_metric, [&](const Vec<3>& y) { return hyp_field(k, y); }, x, 1e-5);
            worst_g = std::max(worst_g, rel(L.cwiseAbs().maxCoeff(), uhs_metric(x).cwiseAbs().maxCoeff()));
        }
        const LKilling c{rng.square(1.0), rng.square(1.0), rng.square(1.0)};
        for (int p = 0; p < pts; ++p) {
            cplx m1, m2;
            do {
                m1 = rng.square(1.5);
                m2 = rng.square(1.5);
            } while (std::abs(1.0 + m1 * std::conj(m2)) < 0.3);
            const Vec<4> x = detail::real4(m1, m2);
            auto K = [&](const Vec<4>& y) {
                return Vec<4>(detail::real4(l_killing_vector(c, cplx(y[0], y[1]), cplx(y[2], y[3]))));
            };
            const Mat<4> L = lie_derivative<4>(G_metric, K, x, 1e-5);
            worst_G = std::max(worst_G, rel(L.cwiseAbs().maxCoeff(), G_metric(x).cwiseAbs().maxCoeff()));
        }
    }
    rec.add(6, "lie_derivative_g_hyp_killing", Kind::Fd, worst_g, 1e-6, sets * pts, "relative to max |g_ij|");
    rec.add(6, "lie_derivative_G_l_killing", Kind::Fd, worst_G, 1e-6, sets * pts, "relative to max |G_ij|");
}

void algebra_closure(Recorder& rec, Sampler& rng) {
    const int pairs = 10, pts = 8;
    const HypKilling basis[6] = {{1.0, 0.0, 0.0}, {I, 0.0, 0.0}, {0.0, 1.0, 0.0},
                                 {0.0, I, 0.0},   {0.0, 0.0, 1.0}, {0.0, 0.0, I}};
    double worst = 0.0;
    for (int p = 0; p < pairs; ++p) {
        const HypKilling k1 = random_hyp(rng), k2 = random_hyp(rng);
        Eigen::MatrixXd A(3 * pts, 6);
        Eigen::VectorXd rhs(3 * pts);
        for (int q = 0; q < pts; ++q) {
            const Vec<3> x(rng.uniform(0.5, 2.0), rng.uniform(-1, 1), rng.uniform(-1, 1));
            Mat<3> d1, d2;
            for (int i = 0; i < 3; ++i) {
                const Vec<3> e = Vec<3>::Unit(i);
                d1.col(i) = numdiff::central([&](double s) { return hyp_field(k1, x + s * e); }, 0.0, 1e-5);
                d2.col(i) = numdiff::central([&](double s) { return hyp_field(k2, x + s * e); }, 0.0, 1e-5);
            }
            rhs.segment<3>(3 * q) = d2 * hyp_field(k1, x) - d1 * hyp_field(k2, x);
            for (int b = 0; b < 6; ++b) A.block<3, 1>(3 * q, b) = hyp_field(basis[b], x);
        }
        const Eigen::VectorXd c = A.colPivHouseholderQr().solve(rhs);
        worst = std::max(worst, rel((A * c - rhs).norm(), rhs.norm()));
    }
    rec.add(0, "lie_algebra_closure", Kind::Fd, worst, 1e-4, pairs, "least-squares residual of commutators");
}

} // namespace

void suite_killing(Recorder& rec, Sampler& rng) {
    lie_derivatives(rec, rng);
    algebra_closure(rec, rng);
}

} // namespace geodex::verify
