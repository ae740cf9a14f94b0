#include <cmath>
#include <vector>

#include "geodex/lspace.hpp"
#include "geodex/numdiff.hpp"
#include "geodex/parallel.hpp"
#include "util.hpp"

namespace geodex::verify {

using namespace lspace;
using detail::rel;

namespace {

GeodesicUhs random_geodesic(Sampler& rng) { return {rng.annulus(0.5, 2.0), rng.square(1.0)}; }

LTangent random_tangent(Sampler& rng, Chart c) { return detail::ltangent(c, detail::random4(rng)); }

double tnorm(const LTangent& X) { return std::sqrt(abs2(X.a) + abs2(X.b)); }

double tdist(const LTangent& X, const LTangent& Y) { return std::sqrt(abs2(X.a - Y.a) + abs2(X.b - Y.b)); }

// sample (mu1, mu2) in a bounded region away from the reflected diagonal
std::pair<cplx, cplx> random_mu(Sampler& rng) {
    for (;;) {
        const cplx m1 = rng.square(1.5), m2 = rng.square(1.5);
        if (std::abs(m1) <= 1.5 && std::abs(m2) <= 1.5 && std::abs(1.0 + m1 * std::conj(m2)) >= 0.3)
            return {m1, m2};
    }
}

void kahler_identities(Recorder& rec, Sampler& rng) {
    const int n = 200;
    double j2 = 0.0, jconj = 0.0, om_inv = 0.0, g_om = 0.0, g_sym = 0.0, chart_om = 0.0, chart_g = 0.0;
    double gram_t = 0.0, round = 0.0;
    int bad_sig = 0, bad_sig_mu = 0;
    for (int i = 0; i < n; ++i) {
        const GeodesicUhs g = random_geodesic(rng);
        const GeodesicGlobal gm = mu_from_xieta(g);
        const LTangent X = random_tangent(rng, Chart::XiEta), Y = random_tangent(rng, Chart::XiEta);
        const LTangent Xm = to_mu_chart(g, X), Ym = to_mu_chart(g, Y);

        j2 = std::max(j2, rel(tdist(apply_J(g, apply_J(g, X)), X * -1.0), tnorm(X)));
        j2 = std::max(j2, rel(tdist(apply_J(gm, apply_J(gm, Xm)), Xm * -1.0), tnorm(Xm)));
        jconj = std::max(jconj, rel(tdist(to_xieta_chart(g, apply_J(gm, Xm)), apply_J(g, X)), tnorm(X)));

        // scales: |X||Y| times the coefficient size of the chart
        const double s_xe = tnorm(X) * tnorm(Y) * (1.0 + std::abs(g.xi()) * std::abs(g.xi()) + 1.0 / abs2(g.xi()));
        auto [m1, m2] = gm.chart_values();
        const double k = 1.0 / abs2(1.0 + m1 * std::conj(m2));
        const double s_mu = tnorm(Xm) * tnorm(Ym) * k;

        om_inv = std::max(om_inv, rel(std::abs(omega(g, apply_J(g, X), apply_J(g, Y)) - omega(g, X, Y)), s_xe));
        om_inv = std::max(om_inv, rel(std::abs(omega(gm, apply_J(gm, Xm), apply_J(gm, Ym)) - omega(gm, Xm, Ym)), s_mu));
        g_om = std::max(g_om, rel(std::abs(metric_G(g, X, Y) - omega(g, apply_J(g, X), Y)), s_xe));
        g_om = std::max(g_om, rel(std::abs(metric_G(gm, Xm, Ym) - omega(gm, apply_J(gm, Xm), Ym)), s_mu));
        g_sym = std::max(g_sym, rel(std::abs(metric_G(g, X, Y) - metric_G(g, Y, X)), s_xe));
        chart_om = std::max(chart_om, rel(std::abs(omega(gm, Xm, Ym) - omega(g, X, Y)), s_xe));
        chart_g = std::max(chart_g, rel(std::abs(metric_G(gm, Xm, Ym) - metric_G(g, X, Y)), s_xe));

        const Eigen::Matrix4d Gx = gram_xieta(g);
        const Eigen::Matrix4d Gm = gram_mu(m1, m2);
        for (int a = 0; a < 4; ++a) {
            Eigen::Vector4d ea = Eigen::Vector4d::Zero();
            ea[a] = 1.0;
            for (int b = 0; b < 4; ++b) {
                Eigen::Vector4d eb = Eigen::Vector4d::Zero();
                eb[b] = 1.0;
                const double qx = metric_G(g, detail::ltangent(Chart::XiEta, ea), detail::ltangent(Chart::XiEta, eb));
                const double qm = metric_G(gm, detail::ltangent(Chart::Mu, ea), detail::ltangent(Chart::Mu, eb));
                gram_t = std::max(gram_t, rel(std::abs(Gx(a, b) - qx), Gx.cwiseAbs().maxCoeff()));
                gram_t = std::max(gram_t, rel(std::abs(Gm(a, b) - qm), Gm.cwiseAbs().maxCoeff()));
            }
        }
        if (signature(Gx) != std::make_pair(2, 2)) ++bad_sig;
        if (signature(Gm) != std::make_pair(2, 2)) ++bad_sig_mu;

        const GeodesicUhs back = xieta_from_mu(gm);
        round = std::max(round, rel(std::abs(back.xi() - g.xi()) + std::abs(back.eta() - g.eta()),
                                    std::abs(g.xi()) + std::abs(g.eta())));
    }
    rec.add(4, "J_squared_minus_identity", Kind::Closed, j2, 1e-14, n, "both charts");
    rec.add(4, "omega_J_invariant", Kind::Closed, om_inv, 1e-12, n, "both charts");
    rec.add(4, "G_equals_omega_J", Kind::Closed, g_om, 1e-12, n, "both charts");
    rec.add(4, "signature_2_2", Kind::Exact, bad_sig, 0, n, "count of points with another signature");
    rec.add(0, "signature_2_2_mu_chart", Kind::Exact, bad_sig_mu, 0, n);
    rec.add(0, "J_chart_conjugation", Kind::Closed, jconj, 1e-10, n);
    rec.add(0, "G_symmetric", Kind::Closed, g_sym, 1e-12, n);
    rec.add(0, "omega_chart_independent", Kind::Closed, chart_om, 1e-10, n);
    rec.add(0, "G_chart_independent", Kind::Closed, chart_g, 1e-10, n);
    rec.add(0, "gram_tensor_matches_quadratic_form", Kind::Closed, gram_t, 1e-12, n);
    rec.add(0, "xieta_mu_round_trip", Kind::Closed, round, 1e-12, n);
}

void omega_closed(Recorder& rec, Sampler& rng) {
    const int n = 50;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        auto [m1, m2] = random_mu(rng);
        const Eigen::Vector4d x0 = detail::real4(m1, m2);
        auto om = [](const Eigen::Vector4d& x) {
            const GeodesicGlobal g = GeodesicGlobal::from_chart(cplx(x[0], x[1]), cplx(x[2], x[3]));
            Eigen::Matrix4d W;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    W(a, b) = omega(g, detail::ltangent(Chart::Mu, Eigen::Vector4d::Unit(a)),
                                    detail::ltangent(Chart::Mu, Eigen::Vector4d::Unit(b)));
            return W;
        };
        std::array<Eigen::Matrix4d, 4> d;
        for (int l = 0; l < 4; ++l)
            d[l] = numdiff::central([&](double s) { return om(x0 + s * Eigen::Vector4d::Unit(l)); }, 0.0, 1e-5);
        const double scale = om(x0).cwiseAbs().maxCoeff();
        for (int l = 0; l < 4; ++l)
            for (int k = 0; k < 4; ++k)
                for (int v = 0; v < 4; ++v)
                    worst = std::max(worst, rel(std::abs(d[l](k, v) + d[k](v, l) + d[v](l, k)), scale));
    }
    rec.add(0, "omega_closed_mu_chart", Kind::Fd, worst, 1e-6, n, "cyclic sum of derivatives");
}

void endpoint_consistency(Recorder& rec, Sampler& rng) {
    const int n = 50;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const GeodesicUhs g = random_geodesic(rng);
        const Endpoints e = endpoints_ball(mu_from_xieta(g));
        const Eigen::Vector3d fut = hyp3::uhs_to_ball(hyp3::geodesic_point(g, 20.0)).y();
        const Eigen::Vector3d past = hyp3::uhs_to_ball(hyp3::geodesic_point(g, -20.0)).y();
        worst = std::max({worst, (fut - e.future).norm(), (past - e.past).norm()});
    }
    rec.add(0, "endpoints_match_limits", Kind::Fd, worst, 1e-6, n, "r = +-20");
}

void curvature(Recorder& rec, Sampler& rng) {
    const int n = 20;
    std::vector<std::pair<cplx, cplx>> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_mu(rng));
    std::vector<CurvatureReport> reps(n);
    parallel_for(n, [&](std::size_t i) {
        reps[i] = curvature_at(GeodesicGlobal::from_chart(pts[i].first, pts[i].second));
    });
    double riem = 0.0, scal = 0.0, weyl = 0.0;
    for (const auto& r : reps) {
        riem = std::max(riem, std::abs(r.riemann_numeric - r.riemann_nonzero));
        scal = std::max({scal, std::abs(r.scalar), std::abs(r.scalar_imag)});
        weyl = std::max(weyl, r.weyl_norm);
    }
    rec.add(5, "riemann_component_closed_vs_numeric", Kind::Fd, riem, 1e-4, n);
    rec.add(5, "scalar_curvature_zero", Kind::Fd, scal, 1e-8, n);
    rec.add(5, "weyl_norm_zero", Kind::Fd, weyl, 1e-6, n);
}

} // namespace

void suite_kahler(Recorder& rec, Sampler& rng) {
    kahler_identities(rec, rng);
    omega_closed(rec, rng);
    endpoint_consistency(rec, rng);
    curvature(rec, rng);
}

} // namespace geodex::verify
