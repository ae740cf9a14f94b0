#include "geodex/geoflow.hpp"

#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace geodex::geoflow {

GeoParams::GeoParams(cplx b1, cplx b2, cplx b3, cplx b4) : b_{b1, b2, b3, b4} {
    for (cplx b : b_)
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw GeometryError(Errc::InvalidArgument, "geodesic parameters must be finite");
    if (b2 == 0.0 || b3 == 0.0)
        throw GeometryError(Errc::InvalidArgument, "b2 and b3 must be nonzero");
}

namespace {

cplx sinh_checked(const GeoParams& p, double t) {
    const cplx sw = std::sinh(p.b2() * t + p.b1());
    if (std::abs(sw) < 1e-12)
        throw GeometryError(Errc::ChartExit, "sinh(b2 t + b1) vanishes: geodesic leaves chart U");
    return sw;
}

} // namespace

GeodesicUhs geodesic_G(const GeoParams& p, double t) {
    const cplx w = p.b2() * t + p.b1();
    const cplx sw = sinh_checked(p, t);
    const cplx wb = std::conj(w);
    return {std::conj(p.b3()) * sw / p.b2(),
            p.b4() - std::conj(p.b2()) * std::cosh(wb) / (p.b3() * std::conj(sw))};
}

LTangent geodesic_G_velocity(const GeoParams& p, double t) {
    const cplx w = p.b2() * t + p.b1();
    const cplx swb = std::conj(sinh_checked(p, t));
    const cplx b2b = std::conj(p.b2());
    return {Chart::XiEta, std::conj(p.b3()) * std::cosh(w), b2b * b2b / (p.b3() * swb * swb)};
}

double tangent_norm_constant(const GeoParams& p) {
    return 0.5 * (p.b2() * p.b2()).imag();
}

GeodesicGlobal geodesic_G_mu(const GeoParams& p, double t) {
    const cplx w = p.b2() * t + p.b1();
    const cplx sw = sinh_checked(p, t);
    const cplx cw = std::cosh(w);
    const cplx swb = std::conj(sw), cwb = std::conj(cw);
    const cplx b2b = std::conj(p.b2()), b3b = std::conj(p.b3()), b4b = std::conj(p.b4());
    // mu1 = -b4 + conj(b2)(1 + cosh wbar)/(b3 sinh wbar)
    const cplx a1 = -p.b4() * p.b3() * swb + b2b * (1.0 + cwb);
    const cplx d1 = p.b3() * swb;
    // mu2 = conj(b3) sinh w/(conj(b3) conj(b4) sinh w + b2 (1 - cosh w))
    const cplx a2 = b3b * sw;
    const cplx d2 = b3b * b4b * sw + p.b2() * (1.0 - cw);
    return {lspace::SpherePoint::from_homogeneous(a1, d1), lspace::SpherePoint::from_homogeneous(a2, d2)};
}

LTangent geodesic_G_mu_velocity(const GeoParams& p, double t) {
    const cplx w = p.b2() * t + p.b1();
    const cplx sw = sinh_checked(p, t);
    const cplx cw = std::cosh(w);
    const cplx swb = std::conj(sw), cwb = std::conj(cw);
    const cplx b2b = std::conj(p.b2()), b3b = std::conj(p.b3()), b4b = std::conj(p.b4());
    const cplx m1dot = -b2b * b2b * (1.0 + cwb) / (p.b3() * swb * swb);
    const cplx den = b3b * b4b * sw + p.b2() * (1.0 - cw);
    if (std::abs(den) < 1e-300)
        throw GeometryError(Errc::ChartBoundary, "mu2 is infinite on this sample");
    const cplx m2dot = p.b2() * p.b2() * b3b * (cw - 1.0) / (den * den);
    return {Chart::Mu, m1dot, m2dot};
}

LKilling killing_of_geodesic(const GeoParams& p) {
    const cplx b2b = std::conj(p.b2());
    const cplx b3 = p.b3(), b4 = p.b4();
    return {-(b3 * b3 * b4 * b4 - b2b * b2b) / (2.0 * b3), -b3 * b4, -b3 / 2.0};
}

std::pair<cplx, cplx> geodesic_acceleration(cplx xi, cplx /*eta*/, cplx dxi, cplx deta) {
    const cplx debar = std::conj(deta);
    const cplx xi2 = xi * xi;
    const cplx xidd = (dxi * dxi - debar * debar * xi2 * xi2) / xi;
    const cplx etadd = -2.0 * std::conj(dxi) * deta / std::conj(xi);
    return {xidd, etadd};
}

namespace {

using State = std::array<double, 8>;

struct System {
    void operator()(const State& x, State& dx, double) const {
        const cplx xi(x[0], x[1]), eta(x[2], x[3]), dxi(x[4], x[5]), deta(x[6], x[7]);
        if (std::abs(xi) < 1e-12)
            throw GeometryError(Errc::StepFailure, "integration reached xi = 0 (chart exit)");
        auto [a, b] = geodesic_acceleration(xi, eta, dxi, deta);
        dx = {dxi.real(), dxi.imag(), deta.real(), deta.imag(), a.real(), a.imag(), b.real(), b.imag()};
    }
};

} // namespace

std::vector<PathSample> integrate_geodesic_numeric(const GeodesicUhs& initial, const LTangent& velocity,
                                                   const std::vector<double>& times) {
    if (velocity.chart != Chart::XiEta)
        throw GeometryError(Errc::ChartMismatch, "velocity must be given in the (xi, eta) chart");
    namespace ode = boost::numeric::odeint;
    State x{initial.xi().real(), initial.xi().imag(), initial.eta().real(), initial.eta().imag(),
            velocity.a.real(), velocity.a.imag(), velocity.b.real(), velocity.b.imag()};
    std::vector<PathSample> out;
    out.reserve(times.size());
    auto observe = [&](const State& s, double t) {
        out.push_back({t, {s[0], s[1]}, {s[2], s[3]}, {s[4], s[5]}, {s[6], s[7]}});
    };
    if (times.empty())
        return out;
    std::vector<double> ts;
    if (times.front() != 0.0)
        ts.push_back(0.0);
    ts.insert(ts.end(), times.begin(), times.end());
    try {
        auto stepper = ode::make_controlled(1e-12, 1e-10, ode::runge_kutta_fehlberg78<State>());
        const double dt0 = ts.size() > 1 ? (ts[1] - ts[0]) / 10.0 : 1e-3;
        ode::integrate_times(stepper, System{}, x, ts.begin(), ts.end(), dt0 == 0.0 ? 1e-3 : dt0, observe,
                             ode::max_step_checker(100000));
    } catch (const GeometryError&) {
        throw;
    } catch (const std::exception& e) {
        throw GeometryError(Errc::StepFailure, e.what());
    }
    for (const auto& s : out)
        if (!std::isfinite(std::abs(s.xi)) || !std::isfinite(std::abs(s.eta)))
            throw GeometryError(Errc::StepFailure, "non-finite state");
    if (times.front() != 0.0)
        out.erase(out.begin());
    return out;
}

std::vector<PathSample> integrate_geodesic_numeric(const GeodesicUhs& initial, const LTangent& velocity,
                                                   double t_end, int samples) {
    if (samples < 2)
        throw GeometryError(Errc::InvalidArgument, "need at least two output samples");
    std::vector<double> ts(samples);
    for (int i = 0; i < samples; ++i) ts[i] = t_end * i / (samples - 1);
    return integrate_geodesic_numeric(initial, velocity, ts);
}

Normalizer normalizing_isometry(const GeoParams& p) {
    const cplx b3 = p.b3(), b4 = p.b4();
    if (std::abs(b3 - 1.0) < 1e-12) {
        if (std::abs(b4) < 1e-12)
            return {HypKilling{}, 1.0, true};
        throw GeometryError(Errc::DegenerateNormalizer, "b3 = 1 with b4 != 0; pre-compose a dilation");
    }
    const cplx gamma = std::log(b3);
    const cplx tau = b3 * b4 / (b3 - 1.0);
    return {HypKilling{0.0, -gamma * tau, gamma}, 1.0, false};
}

GeoParams normalize_geodesic(const GeoParams& p) {
    normalizing_isometry(p);
    return {p.b1(), p.b2(), 1.0, 0.0};
}

} // namespace geodex::geoflow
