#include <cmath>
#include <vector>

#include "geodex/hyp3.hpp"
#include "geodex/numdiff.hpp"
#include "geodex/parallel.hpp"
#include "util.hpp"

namespace geodex::verify {

using namespace hyp3;
using detail::rel;
using Eigen::Vector3cd;
using Eigen::Vector3d;

namespace {

GeodesicUhs random_geodesic(Sampler& rng) { return {rng.annulus(0.5, 2.0), rng.square(1.0)}; }

Vector3d ball_of(const Vector3d& x) { return uhs_to_ball(UhsPoint::from_coords(x)).y(); }

double ball_metric(const Vector3d& y, const Vector3d& X, const Vector3d& Y) {
    const double d = 1.0 - y.squaredNorm();
    return 4.0 * X.dot(Y) / (d * d);
}

void isometry_of_P(Recorder& rec, Sampler& rng) {
    const int n = 100;
    double worst = 0.0, round_trip = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vector3d x(rng.uniform(0.2, 3.0), rng.uniform(-2, 2), rng.uniform(-2, 2));
        Vector3d X, Y;
        for (int k = 0; k < 3; ++k) X[k] = rng.uniform(-1, 1);
        for (int k = 0; k < 3; ++k) Y[k] = rng.uniform(-1, 1);
        const double h = 1e-5;
        auto push = [&](const Vector3d& v) {
            return numdiff::central([&](double s) { return ball_of(x + s * v); }, 0.0, h);
        };
        const Vector3d y = ball_of(x);
        const double gb = ball_metric(y, push(X), push(Y));
        const double gh = X.dot(Y) / (x[0] * x[0]);
        worst = std::max(worst, rel(std::abs(gb - gh), X.norm() * Y.norm() / (x[0] * x[0])));
        const Vector3d back = ball_to_uhs(BallPoint(y)).coords();
        round_trip = std::max(round_trip, rel((back - x).norm(), x.norm()));
    }
    rec.add(1, "ball_pullback_metric", Kind::Fd, worst, 1e-6, n, "relative to |X|_g |Y|_g");
    rec.add(0, "ball_round_trip", Kind::Closed, round_trip, 1e-12, n);
}

void geodesic_checks(Recorder& rec, Sampler& rng) {
    const int n = 50;
    double ode = 0.0, i1 = 0.0, i23 = 0.0, i23_closed = 0.0;
    for (int i = 0; i < n; ++i) {
        const GeodesicUhs g = random_geodesic(rng);
        auto x = [&](double r) { return geodesic_point(g, r).coords(); };
        for (int k = 0; k <= 20; ++k) {
            const double r = -2.0 + 0.2 * k;
            const Vector3d v = numdiff::central4(x, r, 4e-3);
            const Vector3d a = numdiff::second4(x, r, 4e-3);
            const double x0 = x(r)[0];
            const Vector3cd acc = detail::cvec(a) + christoffel(x0, detail::cvec(v), detail::cvec(v));
            ode = std::max(ode, detail::gnorm(x0, acc));
        }
        const double h = 1e-3;
        std::vector<UhsPoint> curve;
        for (int k = 0; k <= 4000; ++k) curve.push_back(geodesic_point(g, -2.0 + h * k));
        const Integrals in = conserved_integrals(curve, h);
        double lo2 = in.I2[0], hi2 = lo2, lo3 = in.I3[0], hi3 = lo3;
        for (std::size_t k = 0; k < curve.size(); ++k) {
            i1 = std::max(i1, std::abs(in.I1[k] - 1.0));
            lo2 = std::min(lo2, in.I2[k]);
            hi2 = std::max(hi2, in.I2[k]);
            lo3 = std::min(lo3, in.I3[k]);
            hi3 = std::max(hi3, in.I3[k]);
        }
        i23 = std::max({i23, hi2 - lo2, hi3 - lo3});
        // values at r = 0, where t = 1/|xi| and dz/dr = 1/conj(xi)
        const cplx dz0 = 1.0 / std::conj(g.xi());
        const double t0 = 1.0 / std::abs(g.xi());
        i23_closed = std::max({i23_closed, std::abs(in.I2[2000] - 2.0 * dz0.imag() / (t0 * t0)),
                               std::abs(in.I3[2000] - 2.0 * dz0.real() / (t0 * t0))});
    }
    rec.add(2, "geodesic_ode_residual", Kind::Fd, ode, 1e-8, n, "g-norm of covariant acceleration, r in [-2,2]");
    rec.add(2, "first_integral_I1_unit", Kind::Fd, i1, 1e-6, n);
    rec.add(2, "first_integrals_I2_I3_constant", Kind::Fd, i23, 1e-6, n, "max minus min along the curve");
    rec.add(0, "first_integrals_I2_I3_values", Kind::Fd, i23_closed, 1e-6, n);

    // a straight Euclidean segment is not a geodesic: I1 must vary
    std::vector<UhsPoint> line;
    for (int k = 0; k <= 200; ++k) line.push_back(UhsPoint(0.5 + 0.01 * k, cplx(0.01 * k, 0.0)));
    const Integrals in = conserved_integrals(line, 0.01);
    double lo = in.I1[0], hi = lo;
    for (double v : in.I1) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    rec.add(0, "negative_control_straight_segment", Kind::Bound, hi - lo, 1e-2, 1);
}

Vector3cd covariant_r(const GeodesicUhs& g, double r, const std::function<Vector3cd(double)>& field, double h) {
    const Vector3cd d = numdiff::central(field, r, h);
    const double x0 = geodesic_point(g, r).t();
    return d + christoffel(x0, adapted_null_frame(g, r).e0.real_basis(), field(r));
}

void frame_checks(Recorder& rec, Sampler& rng) {
    const int n = 50;
    double gram = 0.0, ortho = 0.0, inv = 0.0, parallel = 0.0, jac = 0.0, jac_mix = 0.0, hproj = 0.0, dphi_fd = 0.0;
    double min_det = 1e300;
    for (int i = 0; i < n; ++i) {
        const GeodesicUhs g = random_geodesic(rng);
        const double r = rng.uniform(-2.0, 2.0);
        const double t = geodesic_point(g, r).t();
        const NullFrame f = adapted_null_frame(g, r);
        const ZVec e[3] = {f.e0, f.ep, f.em};
        const double want[3][3] = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) gram = std::max(gram, std::abs(metric(t, e[a], e[b]) - want[a][b]));
        const auto on = orthonormal_pair(f);
        const ZVec o[3] = {f.e0, on[0], on[1]};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) ortho = std::max(ortho, std::abs(metric(t, o[a], o[b]) - (a == b ? 1.0 : 0.0)));
        const Eigen::Matrix3cd prod = frame_matrix_inverse(g, r) * frame_matrix(g, r);
        inv = std::max(inv, (prod - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff());

        auto ep = [&](double s) { return adapted_null_frame(g, s).ep.real_basis(); };
        parallel = std::max(parallel, detail::gnorm(t, covariant_r(g, r, ep, 1e-5)));

        // Jacobi operator nabla^2 J - J + g(J, T) T along the unit-speed geodesic
        auto residual = [&](const std::function<ZVec(double)>& J) {
            const double h = 1e-4;
            auto Jr = [&](double s) { return J(s).real_basis(); };
            auto W = [&](double s) { return covariant_r(g, s, Jr, h); };
            const Vector3cd W2 = covariant_r(g, r, W, h);
            const ZVec j = J(r);
            const Vector3cd T = f.e0.real_basis();
            const Vector3cd res = W2 - j.real_basis() + metric(t, j, f.e0) * T;
            return rel(detail::gnorm(t, res), hnorm(t, j));
        };
        const PhiDirection dxi{1.0, 0.0, 0.0, 0.0, 0.0};
        const PhiDirection deta{0.0, 0.0, 1.0, 0.0, 0.0};
        jac = std::max(jac, residual([&](double s) { return jacobi_field(g, dxi, s); }));
        jac = std::max(jac, residual([&](double s) { return jacobi_field(g, deta, s); }));
        const cplx a = rng.square(1.0), b = rng.square(1.0);
        jac_mix = std::max(jac_mix, residual([&](double s) { return jacobi_field(g, a, b, s); }));

        const PhiDirection X = PhiDirection::real(a, b);
        const ZVec hx = jacobi_field(g, a, b, r);
        hproj = std::max(hproj, rel(hnorm(t, hx - project_normal(g, r, dphi(g, r, X))), hnorm(t, hx)));

        const double dr = rng.uniform(-1, 1);
        auto phi = [&](double s) {
            const GeodesicUhs gs(g.xi() + s * a, g.eta() + s * b);
            return geodesic_point(gs, r + s * dr).coords();
        };
        const Vector3d fd = numdiff::central(phi, 0.0, 1e-5);
        const ZVec an = dphi(g, r, PhiDirection::real(a, b, dr));
        dphi_fd = std::max(dphi_fd, rel(detail::gnorm(t, an.real_basis() - detail::cvec(fd)), hnorm(t, an)));

        // coefficients of e^r and e^-r in f determine h(X); read them at r = 0 and r = 1
        Eigen::Matrix4d M;
        const cplx basis[4][2] = {{1.0, 0.0}, {I, 0.0}, {0.0, 1.0}, {0.0, I}};
        for (int c = 0; c < 4; ++c) {
            const cplx f0 = jacobi_coefficient(g, basis[c][0], basis[c][1], 0.0);
            const cplx f1 = jacobi_coefficient(g, basis[c][0], basis[c][1], 1.0);
            M.col(c) << f0.real(), f0.imag(), f1.real(), f1.imag();
        }
        double hadamard = std::abs(M.determinant());
        for (int c = 0; c < 4; ++c) hadamard /= M.col(c).norm();
        min_det = std::min(min_det, hadamard);
    }
    rec.add(3, "null_frame_inner_products", Kind::Closed, gram, 1e-12, n);
    rec.add(3, "parallel_transport_e_plus", Kind::Fd, parallel, 1e-6, n);
    rec.add(3, "jacobi_residual_dxi_deta", Kind::Fd, jac, 1e-6, n, "relative to |J|");
    rec.add(0, "jacobi_residual_real_combinations", Kind::Fd, jac_mix, 1e-6, n, "relative to |J|");
    rec.add(0, "orthonormal_pair", Kind::Closed, ortho, 1e-12, n);
    rec.add(0, "frame_inversion", Kind::Closed, inv, 1e-12, n);
    rec.add(0, "h_is_normal_part_of_dphi", Kind::Closed, hproj, 1e-12, n);
    rec.add(0, "dphi_matches_difference_quotient", Kind::Fd, dphi_fd, 1e-6, n);
    rec.add(0, "h_injective_hadamard_ratio", Kind::Bound, min_det, 1e-8, n);
}

} // namespace

void suite_hyp3(Recorder& rec, Sampler& rng) {
    isometry_of_P(rec, rng);
    geodesic_checks(rec, rng);
    frame_checks(rec, rng);
}

} // namespace geodex::verify
