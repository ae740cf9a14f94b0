#include <cmath>
#include <numbers>
#include <vector>

#include "geodex/parallel.hpp"
#include "geodex/ruled.hpp"
#include "util.hpp"

namespace geodex::verify {

using namespace ruled;

namespace {

bool sinh_clear(const GeoParams& p, double lo, double hi) {
    for (int i = 0; i <= 1000; ++i)
        if (std::abs(std::sinh(p.b2() * (lo + (hi - lo) * i / 1000.0) + p.b1())) < 0.2) return false;
    return true;
}

double form_gap(const FundamentalForms& a, const FundamentalForms& b, bool first, bool second) {
    auto d = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
    double m = 0.0;
    if (first) m = std::max({d(a.grr, b.grr), d(a.grt, b.grt), d(a.gtt, b.gtt)});
    if (second) m = std::max({m, d(a.K.Krr, b.K.Krr), d(a.K.Krt, b.K.Krt), d(a.K.Ktt, b.K.Ktt)});
    return m;
}

void minimality(Recorder& rec, Sampler& rng) {
    const int n = 10;
    std::vector<GeoParams> ps;
    while (static_cast<int>(ps.size()) < n) {
        const std::size_t i = ps.size();
        cplx b2 = rng.annulus(0.5, 1.5);
        if (i == 0) b2 = std::abs(b2);
        if (i == 1) b2 = I * std::abs(b2);
        const GeoParams p(rng.square(0.5), b2, rng.annulus(0.5, 2.0), rng.square(1.0));
        if (sinh_clear(p, 0.2, 2.0)) ps.push_back(p);
    }
    double H = 0.0, Krr = 0.0, closed = 0.0, inv = 0.0, fd = 0.0, first = 0.0, Hc = 0.0;
    int singular = 0;
    for (const auto& p : ps) {
        try {
            const SurfacePatch patch = sample_surface(p);
            H = std::max(H, patch.max_abs_H());
            Krr = std::max(Krr, patch.max_abs_Krr());
        } catch (const GeometryError&) {
            ++singular;
            H = Krr = std::numeric_limits<double>::infinity();
        }
        const GeoParams q = normalize_geodesic(p);
        auto curve = [&](double t) { return geoflow::geodesic_G(p, t); };
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                const double r = -3.0 + i, t = 0.2 + 0.3 * j;
                const FundamentalForms num = numeric_forms(p, r, t);
                const FundamentalForms cf = closed_form_forms(p, r, t);
                closed = std::max(closed, form_gap(cf, num, false, true));
                first = std::max(first, form_gap(cf, num, true, false));
                Hc = std::max(Hc, std::abs(cf.H));
                inv = std::max(inv, form_gap(numeric_forms(q, r, t), num, true, true));
                if (i % 3 == 0 && j % 3 == 0) fd = std::max(fd, form_gap(numeric_forms_fd(curve, r, t), num, true, true));
            }
    }
    const std::string note = singular ? std::to_string(singular) + " grids hit a singular point" : "64x64, r in [-5,5], t in [0.2,2]";
    rec.add(9, "max_abs_mean_curvature", Kind::Fd, H, 1e-6, n, note);
    rec.add(0, "max_abs_K_rr", Kind::Fd, Krr, 1e-8, n);
    rec.add(0, "closed_form_K_vs_numeric", Kind::Fd, closed, 1e-4, n * 49, "relative to max(1, |K|)");
    rec.add(0, "closed_form_first_form_vs_numeric", Kind::Closed, first, 1e-9, n * 49);
    rec.add(0, "closed_form_trace_zero", Kind::Closed, Hc, 1e-12, n * 49);
    rec.add(0, "normalization_preserves_forms", Kind::Fd, inv, 1e-6, n * 49);
    rec.add(0, "difference_quotients_vs_jets", Kind::Fd, fd, 1e-4, n * 9);

    const GeoParams c(cplx(0.3, 0.4), std::polar(1.0, std::numbers::pi / 4), 1.0, 0.0);
    double control = 0.0;
    try {
        control = sample_surface(perturbed_ruling(c), 64, 64, {-5.0, 5.0}, {0.2, 2.0}).max_abs_H();
    } catch (const GeometryError&) {
        control = 0.0;
    }
    rec.add(9, "negative_control_perturbed_ruling", Kind::Bound, control, 1e-2, 1, "max |H| must exceed tolerance");
}

void classification(Recorder& rec) {
    const cplx b1(0.3, 0.4);
    const cplx null_b2[] = {1.0, I, 2.0, 3.0 * I};
    const cplx other_b2[] = {cplx(1.0, 1.0), std::polar(1.0, std::numbers::pi / 4)};
    double worst_null = 0.0, least_other = std::numeric_limits<double>::infinity();
    int mismatch = 0;
    auto max_K = [&](cplx b2) {
        try {
            return sample_surface(GeoParams(b1, b2, 1.0, 0.0)).max_abs_K();
        } catch (const GeometryError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    for (const cplx b2 : null_b2) {
        const double k = max_K(b2);
        worst_null = std::isnan(k) ? k : std::max(worst_null, k);
        if (!is_totally_geodesic(GeoParams(b1, b2, 1.0, 0.0)) || !(k < 1e-8)) ++mismatch;
    }
    for (const cplx b2 : other_b2) {
        const double k = max_K(b2);
        least_other = std::isnan(k) ? k : std::min(least_other, k);
        if (is_totally_geodesic(GeoParams(b1, b2, 1.0, 0.0)) || !(k > 1e-8)) ++mismatch;
    }
    rec.add(10, "null_b2_max_abs_K", Kind::Fd, worst_null, 1e-8, 4, "b2 in {1, i, 2, 3i}");
    rec.add(10, "non_null_b2_max_abs_K", Kind::Bound, least_other, 1e-8, 2, "b2 in {1+i, exp(i pi/4)}");
    rec.add(10, "classification_matches_criterion", Kind::Exact, mismatch, 0, 6);
}

} // namespace

void suite_ruled(Recorder& rec, Sampler& rng) {
    minimality(rec, rng);
    classification(rec);
}

} // namespace geodex::verify
