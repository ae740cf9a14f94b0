#include <cmath>
#include <optional>

#include "geodex/isometry.hpp"
#include "geodex/numdiff.hpp"
#include "util.hpp"

namespace geodex::verify {

using namespace isometry;
using detail::rel;
using Eigen::Matrix3d;
using Eigen::Matrix4d;
using Eigen::Vector3d;
using Eigen::Vector4d;

namespace {

HypKilling random_hyp(Sampler& rng, double s) { return {rng.square(s), rng.square(s), rng.square(s)}; }

Vector3d random_uhs(Sampler& rng) { return {rng.uniform(0.3, 3.0), rng.uniform(-2, 2), rng.uniform(-2, 2)}; }

Vector3d flow(const HypKilling& k, const Vector3d& x, double s) {
    return hyp_flow(k, UhsPoint::from_coords(x), s).coords();
}

Vector3d field(const HypKilling& k, const Vector3d& x) {
    const hyp3::Tangent3 v = hyp_killing_vector(k, UhsPoint::from_coords(x));
    return {v.u, v.v.real(), v.v.imag()};
}

Vector4d xe_coords(const GeodesicUhs& g) { return detail::real4(g.xi(), g.eta()); }
GeodesicUhs xe_point(const Vector4d& x) { return {cplx(x[0], x[1]), cplx(x[2], x[3])}; }

double xe_dist(const GeodesicUhs& a, const GeodesicUhs& b) { return (xe_coords(a) - xe_coords(b)).norm(); }

Vector4d mu_coords(const GeodesicUhs& g) {
    auto [m1, m2] = lspace::mu_from_xieta(g).chart_values();
    return detail::real4(m1, m2);
}

Matrix4d G_gram(const GeodesicUhs& g) { return lspace::gram_xieta(g); }

// a Killing field of H^3 together with a geodesic whose l_action orbit stays in chart U for |s| <= 0.5
struct ActionSample {
    HypKilling k;
    GeodesicUhs g;
};

ActionSample random_action(Sampler& rng) {
    for (;;) {
        const HypKilling k = random_hyp(rng, 0.5);
        const GeodesicUhs g(rng.annulus(0.5, 2.0), rng.square(1.0));
        try {
            for (int i = -10; i <= 10; ++i) {
                const GeodesicUhs h = l_action(k, g, 0.05 * i);
                if (std::abs(h.xi()) < 0.1 || std::abs(h.eta()) > 20.0) throw GeometryError(Errc::LeavesChart, "");
            }
            return {k, g};
        } catch (const GeometryError&) {
        }
    }
}

void hyp_flow_checks(Recorder& rec, Sampler& rng) {
    const int n = 30;
    double group = 0.0, gen = 0.0, roots = 0.0, pullback = 0.0, series = 0.0;
    for (int i = 0; i < n; ++i) {
        const HypKilling k = random_hyp(rng, 1.0);
        const Vector3d x = random_uhs(rng);
        const double s1 = rng.uniform(-1, 1), s2 = rng.uniform(-1, 1);
        const Vector3d a = flow(k, x, s1 + s2), b = flow(k, flow(k, x, s2), s1);
        group = std::max(group, rel((a - b).norm(), a.norm()));

        const Vector3d d = numdiff::central([&](double s) { return flow(k, x, s); }, 0.0, 1e-5);
        const Vector3d K = field(k, x);
        gen = std::max(gen, rel((d - K).norm(), std::max(1.0, K.norm())));

        const auto r = tau_roots(k);
        for (const cplx tau : r) {
            const Vector3d c = hyp_flow_with_root(k, UhsPoint::from_coords(x), s1, tau).coords();
            roots = std::max(roots, rel((c - flow(k, x, s1)).norm(), c.norm()));
        }

        Matrix3d J;
        for (int j = 0; j < 3; ++j)
            J.col(j) = numdiff::central([&](double e) { return flow(k, x + e * Vector3d::Unit(j), s1); }, 0.0, 1e-5);
        const double t1 = flow(k, x, s1)[0];
        const Matrix3d pulled = J.transpose() * J / (t1 * t1);
        const Matrix3d g0 = Matrix3d::Identity() / (x[0] * x[0]);
        pullback = std::max(pullback, rel((pulled - g0).cwiseAbs().maxCoeff(), g0(0, 0)));

        // gamma1 = +-sqrt(gamma^2 - 4 conj(alpha) beta); put it near zero to exercise the series branch
        HypKilling p = k;
        p.gamma = std::sqrt(4.0 * std::conj(k.alpha) * k.beta) + cplx(1e-10 * rng.uniform(-1, 1), 0.0);
        const Vector3d pa = flow(p, x, s1 + s2), pb = flow(p, flow(p, x, s2), s1);
        series = std::max(series, rel((pa - pb).norm(), pa.norm()));
    }
    rec.add(7, "hyp_flow_group_law", Kind::Closed, group, 1e-9, n);
    rec.add(7, "hyp_flow_generator", Kind::Fd, gen, 1e-6, n);
    rec.add(0, "hyp_flow_root_independent", Kind::Closed, roots, 1e-9, n);
    rec.add(0, "hyp_flow_isometry", Kind::Fd, pullback, 1e-5, n);
    rec.add(0, "hyp_flow_group_law_series_branch", Kind::Fd, series, 1e-6, n);
}

void l_action_checks(Recorder& rec, Sampler& rng) {
    const int n = 30;
    double preserve = 0.0, gen_mu = 0.0, gen_xe = 0.0, group = 0.0, ends = 0.0, shift = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [k, g] = random_action(rng);
        const double s1 = rng.uniform(-0.25, 0.25), s2 = rng.uniform(-0.25, 0.25);

        Matrix4d J;
        const Vector4d x = xe_coords(g);
        for (int j = 0; j < 4; ++j)
            J.col(j) = numdiff::central([&](double e) { return xe_coords(l_action(k, xe_point(x + e * Vector4d::Unit(j)), s1)); },
                                        0.0, 1e-5);
        const Matrix4d G0 = G_gram(g);
        const Matrix4d G1 = J.transpose() * G_gram(l_action(k, g, s1)) * J;
        preserve = std::max(preserve, rel((G1 - G0).cwiseAbs().maxCoeff(), G0.cwiseAbs().maxCoeff()));

        const lspace::GeodesicGlobal gm = lspace::mu_from_xieta(g);
        const Vector4d Kmu = detail::real4(l_killing_vector(induced_killing(k), gm));
        const Vector4d dmu = numdiff::central([&](double s) { return mu_coords(l_action(k, g, s)); }, 0.0, 1e-5);
        gen_mu = std::max(gen_mu, rel((dmu - Kmu).norm(), std::max(1.0, Kmu.norm())));
        const Vector4d Kxe = detail::real4(lspace::to_xieta_chart(g, detail::ltangent(Chart::Mu, Kmu)));
        const Vector4d dxe = numdiff::central([&](double s) { return xe_coords(l_action(k, g, s)); }, 0.0, 1e-5);
        gen_xe = std::max(gen_xe, rel((dxe - Kxe).norm(), std::max(1.0, Kxe.norm())));

        const GeodesicUhs a = l_action(k, g, s1 + s2), b = l_action(k, l_action(k, g, s2), s1);
        group = std::max(group, rel(xe_dist(a, b), xe_coords(a).norm()));

        const GeodesicUhs img = l_action(k, g, s1);
        const lspace::Endpoints e = lspace::endpoints_ball(lspace::mu_from_xieta(img));
        for (const double r : {-20.0, 20.0}) {
            const Vector3d y = hyp3::uhs_to_ball(hyp_flow(k, hyp3::geodesic_point(g, r), s1)).y();
            ends = std::max(ends, (y - (r > 0 ? e.future : e.past)).norm());
        }

        const double dr = l_action_r_shift(k, g, s1);
        for (const double r : {-1.0, 0.0, 1.5}) {
            const Vector3d p = hyp_flow(k, hyp3::geodesic_point(g, r), s1).coords();
            const Vector3d q = hyp3::geodesic_point(img, r + dr).coords();
            shift = std::max(shift, rel((p - q).norm(), p.norm()));
        }
    }
    rec.add(7, "l_action_preserves_G", Kind::Fd, preserve, 1e-5, n, "pullback through difference-quotient Jacobian");
    rec.add(7, "induced_killing_generator_mu", Kind::Fd, gen_mu, 1e-6, n, "c = (-beta, gamma, -conj(alpha))");
    rec.add(0, "induced_killing_generator_xieta", Kind::Fd, gen_xe, 1e-6, n);
    rec.add(0, "l_action_group_law", Kind::Closed, group, 1e-9, n);
    rec.add(0, "l_action_endpoints_follow_flow", Kind::Fd, ends, 1e-6, n, "r = +-20");
    rec.add(0, "l_action_pointwise_with_r_shift", Kind::Closed, shift, 1e-9, n);
}

} // namespace

void suite_flows(Recorder& rec, Sampler& rng) {
    hyp_flow_checks(rec, rng);
    l_action_checks(rec, rng);
}

} // namespace geodex::verify
