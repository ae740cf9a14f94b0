#include "geodex/ruled.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "geodex/numdiff.hpp"
#include "geodex/parallel.hpp"

namespace geodex::ruled {

using jet::Jet2;

namespace {

CJet cj(cplx z) { return CJet::from(z); }

CJet mul_t(cplx b, const Jet2& t) { return {Jet2(b.real()) * t, Jet2(b.imag()) * t}; }

std::pair<CJet, CJet> geodesic_on_jets(const GeoParams& p, const CJet& w) {
    const CJet sw = jet::sinh(w);
    const CJet xi = cj(std::conj(p.b3())) * sw / cj(p.b2());
    const CJet wb = jet::conj(w);
    const CJet eta = cj(p.b4()) - cj(std::conj(p.b2())) * jet::cosh(wb) / (cj(p.b3()) * jet::conj(sw));
    return {xi, eta};
}

using V3 = Eigen::Matrix<jet::real, 3, 1>;

struct Frame3 {
    V3 S, Sr, St, Srr, Srt, Stt;
};

// Gamma^k_ij X^i Y^j of the half-space metric in (x0, x1, x2)
V3 christoffel(jet::real x0, const V3& X, const V3& Y) {
    return V3(-X[0] * Y[0] + X[1] * Y[1] + X[2] * Y[2], -(X[0] * Y[1] + X[1] * Y[0]),
              -(X[0] * Y[2] + X[2] * Y[0])) / x0;
}

FundamentalForms forms_from_derivatives(const Frame3& f) {
    const jet::real x0 = f.S[0];
    const V3 cross = f.Sr.cross(f.St);
    const jet::real cn = cross.norm();
    if (!(cn > 0))
        throw GeometryError(Errc::SingularPoint, "surface tangents are parallel");
    const V3 N = cross * (x0 / cn);
    auto g = [x0](const V3& a, const V3& b) { return a.dot(b) / (x0 * x0); };
    const jet::real grr = g(f.Sr, f.Sr), grt = g(f.Sr, f.St), gtt = g(f.St, f.St);
    const jet::real det = grr * gtt - grt * grt;
    if (!(det >= 1e-14))
        throw GeometryError(Errc::SingularPoint, "induced metric is degenerate");
    const jet::real krr = g(f.Srr + christoffel(x0, f.Sr, f.Sr), N);
    const jet::real krt = g(f.Srt + christoffel(x0, f.Sr, f.St), N);
    const jet::real ktt = g(f.Stt + christoffel(x0, f.St, f.St), N);
    FundamentalForms out;
    out.grr = static_cast<double>(grr);
    out.grt = static_cast<double>(grt);
    out.gtt = static_cast<double>(gtt);
    out.K = {static_cast<double>(krr), static_cast<double>(krt), static_cast<double>(ktt)};
    out.H = static_cast<double>((gtt * krr - 2 * grt * krt + grr * ktt) / det);
    return out;
}

} // namespace

JetCurve geodesic_ruling(const GeoParams& p) {
    return [p](const Jet2& t) { return geodesic_on_jets(p, mul_t(p.b2(), t) + cj(p.b1())); };
}

JetCurve perturbed_ruling(const GeoParams& p) {
    return [p](const Jet2& t) {
        auto [xi, eta] = geodesic_on_jets(p, mul_t(p.b2(), t) + cj(p.b1()));
        const CJet w2 = mul_t(p.b2(), t * t) + cj(p.b1());
        xi = cj(std::conj(p.b3())) * jet::sinh(w2) / cj(p.b2());
        return std::make_pair(xi, eta);
    };
}

UhsPoint surface_point(const GeoParams& p, double r, double t) {
    return hyp3::geodesic_point(geoflow::geodesic_G(p, t), r);
}

double m_squared(const GeoParams& pin, double r, double t) {
    const GeoParams p = geoflow::normalize_geodesic(pin);
    const cplx b2 = p.b2();
    const cplx w = b2 * t + p.b1();
    const cplx sw = std::sinh(w), cw = std::cosh(w);
    const double a2 = abs2(b2);
    return 8.0 * a2 * std::cosh(r) * std::sinh(r) * cw.real()
        - 4.0 * a2 * std::sinh(r) * std::sinh(r) * (abs2(cw) + 1.0) - 2.0 * a2 * abs2(cw)
        - abs2(sw) * 2.0 * (b2 * b2).real() - 2.0 * a2;
}

double m_squared_as_printed(const GeoParams& pin, double r, double t) {
    const GeoParams p = geoflow::normalize_geodesic(pin);
    const cplx b2 = p.b2();
    const cplx w = b2 * t + p.b1();
    const double a2 = abs2(b2);
    return m_squared(pin, r, t) - 6.0 * a2 * std::cosh(r) * std::sinh(r) * std::cosh(w).real();
}

SecondForm second_fundamental_form(const GeoParams& pin, double r, double t) {
    const GeoParams p = geoflow::normalize_geodesic(pin);
    const cplx b2 = p.b2();
    const cplx w = b2 * t + p.b1();
    const cplx sw = std::sinh(w);
    if (std::abs(sw) < 1e-12)
        throw GeometryError(Errc::ChartExit, "sinh(b2 t + b1) vanishes");
    const double M2 = m_squared(p, r, t);
    if (!(M2 < 0.0))
        throw GeometryError(Errc::SingularPoint, "M^2 is not negative");
    const double m = std::sqrt(-M2);
    const double im = (b2 * b2).imag();
    const double asw = std::abs(sw);
    SecondForm K;
    K.Krr = 0.0;
    K.Krt = asw * im / m;
    K.Ktt = 2.0 * (std::conj(b2) * sw).real() * im / (asw * m);
    const FundamentalForms g = closed_form_forms(p, r, t);
    if (g.grr * g.gtt - g.grt * g.grt < 1e-14)
        throw GeometryError(Errc::SingularPoint, "induced metric is degenerate");
    return K;
}

FundamentalForms closed_form_forms(const GeoParams& pin, double r, double t) {
    const GeoParams p = geoflow::normalize_geodesic(pin);
    const GeodesicUhs g = geoflow::geodesic_G(p, t);
    const LTangent v = geoflow::geodesic_G_velocity(p, t);
    FundamentalForms out;
    out.grr = 1.0;
    out.grt = (v.b * std::conj(g.xi())).real();
    const cplx f = hyp3::jacobi_coefficient(g, v.a, v.b, r);
    out.gtt = out.grt * out.grt + 2.0 * abs2(f);
    const double det = out.grr * out.gtt - out.grt * out.grt;
    if (det < 1e-14)
        throw GeometryError(Errc::SingularPoint, "induced metric is degenerate");
    // K from the closed form; SingularPoint already excluded above
    const cplx b2 = p.b2();
    const cplx sw = std::sinh(b2 * t + p.b1());
    const double m = std::sqrt(-m_squared(p, r, t));
    const double im = (b2 * b2).imag();
    out.K.Krr = 0.0;
    out.K.Krt = std::abs(sw) * im / m;
    out.K.Ktt = 2.0 * (std::conj(b2) * sw).real() * im / (std::abs(sw) * m);
    out.H = (out.gtt * out.K.Krr - 2.0 * out.grt * out.K.Krt + out.grr * out.K.Ktt) / det;
    return out;
}

FundamentalForms numeric_forms(const JetCurve& curve, double r, double t) {
    const Jet2 rj = Jet2::variable(r, 0);
    const Jet2 tj = Jet2::variable(t, 1);
    auto [xi, eta] = curve(tj);
    if (value(jet::norm(xi)) < 1e-24)
        throw GeometryError(Errc::ChartExit, "ruling leaves chart U");
    const Jet2 x0 = jet::recip(jet::abs(xi) * jet::cosh(rj));
    const CJet z = eta + jet::scale(jet::recip(jet::conj(xi)), jet::tanh(rj));
    const Jet2 c[3] = {x0, z.re, z.im};
    Frame3 f;
    for (int k = 0; k < 3; ++k) {
        f.S[k] = c[k].v;
        f.Sr[k] = c[k].d[0];
        f.St[k] = c[k].d[1];
        f.Srr[k] = c[k].h[0];
        f.Srt[k] = c[k].h[1];
        f.Stt[k] = c[k].h[2];
    }
    return forms_from_derivatives(f);
}

FundamentalForms numeric_forms(const GeoParams& p, double r, double t) {
    geoflow::geodesic_G(p, t);  // ChartExit check
    return numeric_forms(geodesic_ruling(p), r, t);
}

FundamentalForms numeric_forms_fd(const std::function<GeodesicUhs(double)>& curve, double r, double t, double h) {
    auto S = [&](double rr, double tt) { return hyp3::geodesic_point(curve(tt), rr).coords(); };
    Frame3 f;
    f.S = S(r, t).cast<jet::real>();
    f.Sr = numdiff::central4([&](double x) { return S(x, t); }, r, h).cast<jet::real>();
    f.St = numdiff::central4([&](double x) { return S(r, x); }, t, h).cast<jet::real>();
    f.Srr = numdiff::second4([&](double x) { return S(x, t); }, r, h).cast<jet::real>();
    f.Stt = numdiff::second4([&](double x) { return S(r, x); }, t, h).cast<jet::real>();
    f.Srt = numdiff::central4([&](double x) { return numdiff::central4([&](double y) { return S(y, x); }, r, h); },
                              t, h)
                .cast<jet::real>();
    return forms_from_derivatives(f);
}

double mean_curvature(const GeoParams& p, double r, double t) {
    return numeric_forms(p, r, t).H;
}

double mean_curvature_closed(const GeoParams& p, double r, double t) {
    return closed_form_forms(p, r, t).H;
}

bool is_totally_geodesic(const GeoParams& p) {
    return (p.b2() * p.b2()).imag() == 0.0;
}

double SurfacePatch::max_abs_H() const {
    double m = 0;
    for (const auto& s : samples) m = std::max(m, std::abs(s.numeric.H));
    return m;
}

double SurfacePatch::max_abs_Krr() const {
    double m = 0;
    for (const auto& s : samples) m = std::max(m, std::abs(s.numeric.K.Krr));
    return m;
}

double SurfacePatch::max_abs_K() const {
    double m = 0;
    for (const auto& s : samples)
        m = std::max({m, std::abs(s.numeric.K.Krr), std::abs(s.numeric.K.Krt), std::abs(s.numeric.K.Ktt)});
    return m;
}

namespace {

double grid_value(std::pair<double, double> range, int i, int n) {
    if (n == 1) return range.first;
    return range.first + (range.second - range.first) * i / (n - 1);
}

} // namespace

SurfacePatch sample_surface(const JetCurve& curve, int nr, int nt, std::pair<double, double> r_range,
                            std::pair<double, double> t_range) {
    if (nr < 1 || nt < 1)
        throw GeometryError(Errc::InvalidArgument, "grid must have at least one sample per direction");
    SurfacePatch patch;
    patch.nr = nr;
    patch.nt = nt;
    patch.r_range = r_range;
    patch.t_range = t_range;
    patch.samples.resize(static_cast<std::size_t>(nr) * nt);
    parallel_for(patch.samples.size(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / nt, j = static_cast<int>(idx) % nt;
        const double r = grid_value(r_range, i, nr), t = grid_value(t_range, j, nt);
        SurfaceSample& s = patch.samples[idx];
        s.r = r;
        s.t = t;
        auto [xi, eta] = curve(Jet2(t));
        const GeodesicUhs g(cplx(xi.re.v, xi.im.v), cplx(eta.re.v, eta.im.v));
        const UhsPoint pt = hyp3::geodesic_point(g, r);
        s.x0 = pt.t();
        s.z = pt.z();
        s.ball = hyp3::uhs_to_ball(pt).y();
        s.numeric = numeric_forms(curve, r, t);
    });
    return patch;
}

SurfacePatch sample_surface(const GeoParams& p, int nr, int nt, std::pair<double, double> r_range,
                            std::pair<double, double> t_range) {
    for (int j = 0; j < nt; ++j) geoflow::geodesic_G(p, grid_value(t_range, j, nt));
    return sample_surface(geodesic_ruling(p), nr, nt, r_range, t_range);
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string to_obj(const SurfacePatch& patch) {
    std::ostringstream os;
    os << "# ruled surface, ball model, " << patch.nr << "x" << patch.nt << "\n";
    for (const auto& s : patch.samples)
        os << "v " << fmt(s.ball[0]) << " " << fmt(s.ball[1]) << " " << fmt(s.ball[2]) << "\n";
    auto id = [&](int i, int j) { return i * patch.nt + j + 1; };
    for (int i = 0; i + 1 < patch.nr; ++i)
        for (int j = 0; j + 1 < patch.nt; ++j) {
            os << "f " << id(i, j) << " " << id(i + 1, j) << " " << id(i + 1, j + 1) << "\n";
            os << "f " << id(i, j) << " " << id(i + 1, j + 1) << " " << id(i, j + 1) << "\n";
        }
    return os.str();
}

std::string to_csv(const SurfacePatch& patch) {
    std::ostringstream os;
    os << "r,t,x,y,z,H,K_rt,K_tt\n";
    for (const auto& s : patch.samples)
        os << fmt(s.r) << "," << fmt(s.t) << "," << fmt(s.ball[0]) << "," << fmt(s.ball[1]) << ","
           << fmt(s.ball[2]) << "," << fmt(s.numeric.H) << "," << fmt(s.numeric.K.Krt) << ","
           << fmt(s.numeric.K.Ktt) << "\n";
    return os.str();
}

} // namespace geodex::ruled
