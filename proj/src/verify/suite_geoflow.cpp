#include <cmath>
#include <numbers>
#include <vector>

#include "geodex/geoflow.hpp"
#include "geodex/numdiff.hpp"
#include "geodex/parallel.hpp"
#include "util.hpp"

namespace geodex::verify {

using namespace geoflow;
using detail::rel;
using Eigen::Vector4d;

namespace {

// |b2|, |b3| in [0.5, 2]; sinh(b2 t + b1) bounded away from zero on [0.1, 2]
GeoParams random_params(Sampler& rng) {
    for (;;) {
        const GeoParams p(rng.square(1.0), rng.annulus(0.5, 2.0), rng.annulus(0.5, 2.0), rng.square(1.0));
        double m = 1e300;
        for (int i = 0; i <= 1900; ++i) m = std::min(m, std::abs(std::sinh(p.b2() * (0.1 + 0.001 * i) + p.b1())));
        if (m > 0.2) return p;
    }
}

struct IntegratorResult {
    double deviation = 0.0, drift = 0.0;
};

void closed_vs_integrator(Recorder& rec, Sampler& rng) {
    const int n = 50;
    std::vector<GeoParams> ps;
    for (int i = 0; i < n; ++i) ps.push_back(random_params(rng));
    std::vector<IntegratorResult> res(n);
    parallel_for(n, [&](std::size_t i) {
        const GeoParams& p = ps[i];
        const double t0 = 0.1;
        std::vector<double> times;
        for (int k = 1; k <= 19; ++k) times.push_back(0.1 * k);
        const auto path = integrate_geodesic_numeric(geodesic_G(p, t0), geodesic_G_velocity(p, t0), times);
        const double c = tangent_norm_constant(p);
        IntegratorResult r;
        for (const auto& s : path) {
            const GeodesicUhs g = geodesic_G(p, t0 + s.t);
            r.deviation = std::max({r.deviation, std::abs(s.xi - g.xi()), std::abs(s.eta - g.eta())});
            const LTangent v{Chart::XiEta, s.dxi, s.deta};
            r.drift = std::max(r.drift, std::abs(lspace::metric_G(GeodesicUhs(s.xi, s.eta), v, v) - c));
        }
        res[i] = r;
    });
    double dev = 0.0, drift = 0.0;
    for (const auto& r : res) {
        dev = std::max(dev, r.deviation);
        drift = std::max(drift, r.drift);
    }
    rec.add(8, "closed_form_vs_integrator", Kind::Fd, dev, 1e-7, n, "t in [0.1, 2], adaptive RKF78");
    rec.add(0, "integrator_norm_drift", Kind::Fd, drift, 1e-8, n);
}

void along_closed_form(Recorder& rec, Sampler& rng) {
    const int n = 20, nt = 20;
    double norm = 0.0, kill_fd = 0.0, kill_an = 0.0, comp = 0.0, ode = 0.0, normal = 0.0;
    int skipped = 0;
    for (int i = 0; i < n; ++i) {
        const GeoParams p = random_params(rng);
        const LKilling c = killing_of_geodesic(p);
        const GeoParams q = normalize_geodesic(p);
        const Normalizer nz = normalizing_isometry(p);
        for (int k = 0; k < nt; ++k) {
            const double t = 0.1 + 1.9 * k / (nt - 1);
            const GeodesicUhs g = geodesic_G(p, t);
            const LTangent v = geodesic_G_velocity(p, t);
            norm = std::max(norm, std::abs(lspace::metric_G(g, v, v) - tangent_norm_constant(p)));

            const Eigen::Vector3d a = lspace::mu_from_xieta(g).mu1().vec(), b = lspace::mu_from_xieta(g).mu2().vec();
            const GeodesicGlobal gm = geodesic_G_mu(p, t);
            comp = std::max({comp, (gm.mu1().vec() - a).norm(), (gm.mu2().vec() - b).norm()});

            auto xe = [&](double s) { return detail::real4(geodesic_G(p, s).xi(), geodesic_G(p, s).eta()); };
            const Vector4d acc = numdiff::second4(xe, t, 2e-3);
            auto [xa, ea] = geodesic_acceleration(g.xi(), g.eta(), v.a, v.b);
            const Vector4d want = detail::real4(xa, ea);
            ode = std::max(ode, rel((acc - want).norm(), std::max(1.0, want.norm())));

            const GeodesicUhs img = nz.identity ? g : isometry::l_action(nz.k, g, nz.s);
            const GeodesicUhs tgt = geodesic_G(q, t);
            normal = std::max(normal, rel(std::abs(img.xi() - tgt.xi()) + std::abs(img.eta() - tgt.eta()),
                                          std::abs(tgt.xi()) + std::abs(tgt.eta())));
            try {
                auto [m1, m2] = gm.chart_values();
                const LTangent K = isometry::l_killing_vector(c, m1, m2);
                const Vector4d Kv = detail::real4(K);
                auto mu = [&](double s) {
                    auto [u1, u2] = geodesic_G_mu(p, s).chart_values();
                    return detail::real4(u1, u2);
                };
                const Vector4d d = numdiff::central(mu, t, 1e-5);
                kill_fd = std::max(kill_fd, rel((d - Kv).norm(), std::max(1.0, Kv.norm())));
                const Vector4d an = detail::real4(geodesic_G_mu_velocity(p, t));
                kill_an = std::max(kill_an, rel((an - Kv).norm(), std::max(1.0, Kv.norm())));
            } catch (const GeometryError&) {
                ++skipped;
            }
        }
    }
    const std::string note = skipped ? std::to_string(skipped) + " samples with an infinite chart value skipped" : "";
    rec.add(8, "G_norm_equals_half_im_b2_squared", Kind::Closed, norm, 1e-9, n * nt);
    rec.add(8, "mu_velocity_matches_killing_field", Kind::Fd, kill_fd, 1e-6, n * nt - skipped, note);
    rec.add(0, "mu_velocity_display_matches_killing_field", Kind::Closed, kill_an, 1e-9, n * nt - skipped);
    rec.add(0, "mu_closed_form_matches_chart_change", Kind::Closed, comp, 1e-10, n * nt);
    rec.add(0, "closed_form_solves_geodesic_equations", Kind::Fd, ode, 1e-6, n * nt);
    rec.add(0, "normalizing_isometry_maps_geodesic", Kind::Closed, normal, 1e-9, n * nt);
}

void null_classification(Recorder& rec, Sampler& rng) {
    int bad = 0, n = 0;
    const cplx null_b2[] = {1.0, I, 2.0, 3.0 * I, -0.7, -1.3 * I};
    const cplx other_b2[] = {cplx(1, 1), std::polar(1.0, std::numbers::pi / 4), cplx(0.3, -2.0)};
    for (const cplx b2 : null_b2) {
        const GeoParams p(rng.square(1.0), b2, 1.0, 0.0);
        if (tangent_norm_constant(p) != 0.0) ++bad;
        ++n;
    }
    for (const cplx b2 : other_b2) {
        const GeoParams p(rng.square(1.0), b2, 1.0, 0.0);
        if (tangent_norm_constant(p) == 0.0) ++bad;
        ++n;
    }
    rec.add(0, "null_iff_b2_real_or_imaginary", Kind::Exact, bad, 0, n);
}

} // namespace

void suite_geoflow(Recorder& rec, Sampler& rng) {
    closed_vs_integrator(rec, rng);
    along_closed_form(rec, rng);
    null_classification(rec, rng);
}

} // namespace geodex::verify
