#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "geodex/isometry.hpp"
#include "geodex/numdiff.hpp"

using namespace geodex;
using namespace geodex::isometry;

namespace {

template <class F>
void expect_code(F&& f, Errc code) {
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(code);
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

HypKilling random_k(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    return {cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
}

} // namespace

TEST(HypKillingVector, Translation) {
    // Re taken as (X + conj X)/2: beta = 1 is the unit horizontal translation
    const hyp3::Tangent3 v = hyp_killing_vector({0.0, 1.0, 0.0}, UhsPoint(0.7, cplx(0.2, -0.3)));
    EXPECT_EQ(v.v, cplx(1.0));
    EXPECT_EQ(v.u, 0.0);
}

TEST(HypKillingVector, Dilation) {
    const UhsPoint p(0.7, cplx(0.2, -0.3));
    const hyp3::Tangent3 v = hyp_killing_vector({0.0, 0.0, 1.0}, p);
    EXPECT_EQ(v.v, p.z());
    EXPECT_DOUBLE_EQ(v.u, p.t());
}

TEST(LKillingVector, AtOrigin) {
    const LTangent a = l_killing_vector(LKilling{1.0, 0.0, 0.0}, 0.0, 0.0);
    EXPECT_EQ(a.a, cplx(1.0));
    EXPECT_EQ(a.b, cplx(0.0));
    const LTangent b = l_killing_vector(LKilling{0.0, 0.0, 1.0}, 0.0, 0.0);
    EXPECT_EQ(b.a, cplx(0.0));
    EXPECT_EQ(b.b, cplx(1.0));
}

TEST(FlowAux, Examples) {
    const FlowAux a = flow_aux({0.0, 1.0, 1.0});
    EXPECT_EQ(a.tau, cplx(-1.0));
    EXPECT_EQ(a.gamma1, cplx(1.0));
    const FlowAux b = flow_aux({1.0, 0.0, 0.0});
    EXPECT_EQ(b.tau, cplx(0.0));
    EXPECT_EQ(b.gamma1, cplx(0.0));
    expect_code([] { flow_aux({0.0, 1.0, 0.0}); }, Errc::TranslationCase);
}

TEST(FlowAux, RootsSolveTheQuadratic) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const HypKilling k = random_k(rng);
        for (const cplx tau : tau_roots(k))
            EXPECT_LT(std::abs(k.beta + k.gamma * tau + std::conj(k.alpha) * tau * tau), 1e-12);
        const FlowAux f = flow_aux(k);
        const auto r = tau_roots(k);
        EXPECT_LE(std::abs(f.tau), std::max(std::abs(r[0]), std::abs(r[1])));
    }
}

TEST(HypFlow, Examples) {
    const UhsPoint a = hyp_flow({0.0, 1.0, 0.0}, UhsPoint(1.0, 0.0), 2.0);
    EXPECT_DOUBLE_EQ(a.t(), 1.0);
    EXPECT_EQ(a.z(), cplx(2.0));
    const UhsPoint p(0.8, cplx(0.3, -1.2));
    const UhsPoint b = hyp_flow({0.0, 0.0, 1.0}, p, 0.6);
    EXPECT_NEAR(b.t(), 0.8 * std::exp(0.6), 1e-15);
    EXPECT_NEAR(std::abs(b.z() - p.z() * std::exp(0.6)), 0.0, 1e-15);
}

TEST(HypFlow, GeneratorAndGroupLaw) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 30; ++i) {
        const HypKilling k = random_k(rng);
        const UhsPoint p(1.0 + 0.5 * u(rng), cplx(u(rng), u(rng)));
        const Eigen::Vector3d d = numdiff::central([&](double s) { return hyp_flow(k, p, s).coords(); }, 0.0, 1e-5);
        const hyp3::Tangent3 K = hyp_killing_vector(k, p);
        EXPECT_LT((d - Eigen::Vector3d(K.u, K.v.real(), K.v.imag())).norm(), 1e-6);
        const double s1 = u(rng), s2 = u(rng);
        const Eigen::Vector3d a = hyp_flow(k, p, s1 + s2).coords();
        const Eigen::Vector3d b = hyp_flow(k, hyp_flow(k, p, s2), s1).coords();
        EXPECT_LT((a - b).norm(), 1e-9 * a.norm());
    }
}

TEST(HypFlow, ParabolicSeriesBranch) {
    // gamma1 = 0 exactly
    const HypKilling k{1.0, 0.0, 0.0};
    const UhsPoint p(0.9, cplx(0.2, 0.4));
    const Eigen::Vector3d a = hyp_flow(k, p, 0.7).coords();
    const Eigen::Vector3d b = hyp_flow(k, hyp_flow(k, p, 0.3), 0.4).coords();
    EXPECT_LT((a - b).norm(), 1e-12);
}

TEST(LAction, Examples) {
    const GeodesicUhs a = l_action({0.0, 1.0, 0.0}, GeodesicUhs(1.0, 0.0), 1.0);
    EXPECT_EQ(a.xi(), cplx(1.0));
    EXPECT_EQ(a.eta(), cplx(1.0));
    const GeodesicUhs g(cplx(0.6, 0.8), cplx(-0.4, 0.1));
    const GeodesicUhs b = l_action({0.0, 0.0, 1.0}, g, 0.5);
    EXPECT_NEAR(std::abs(b.xi() - g.xi() * std::exp(-0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(b.eta() - g.eta() * std::exp(0.5)), 0.0, 1e-15);
}

TEST(LAction, LeavesChart) {
    // alpha = 1, s = 1: the bracket s (eta + 1/conj(xi)) - 1 vanishes at (xi, eta) = (1, 0)
    expect_code([] { l_action({1.0, 0.0, 0.0}, GeodesicUhs(1.0, 0.0), 1.0); }, Errc::LeavesChart);
}

TEST(LAction, PointwiseWithShift) {
    const HypKilling k{cplx(0.3, -0.2), cplx(0.5, 0.1), cplx(-0.4, 0.6)};
    const GeodesicUhs g(cplx(1.1, 0.3), cplx(0.2, -0.5));
    const double s = 0.35;
    const GeodesicUhs h = l_action(k, g, s);
    const double dr = l_action_r_shift(k, g, s);
    for (double r : {-2.0, 0.0, 1.0}) {
        const Eigen::Vector3d p = hyp_flow(k, hyp3::geodesic_point(g, r), s).coords();
        const Eigen::Vector3d q = hyp3::geodesic_point(h, r + dr).coords();
        EXPECT_LT((p - q).norm(), 1e-12);
    }
}

TEST(InducedKilling, Examples) {
    const LKilling a = induced_killing({0.0, 1.0, 0.0});
    EXPECT_EQ(a.c1, cplx(-1.0));
    EXPECT_EQ(a.c2, cplx(0.0));
    EXPECT_EQ(a.c3, cplx(0.0));
    const LKilling b = induced_killing({1.0, 0.0, 0.0});
    EXPECT_EQ(b.c1, cplx(0.0));
    EXPECT_EQ(b.c2, cplx(0.0));
    EXPECT_EQ(b.c3, cplx(-1.0));
}

TEST(InducedKilling, GeneratorMatch) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    int checked = 0;
    while (checked < 30) {
        const HypKilling k{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        const GeodesicUhs g(cplx(1.0 + u(rng), u(rng)), cplx(2 * u(rng), 2 * u(rng)));
        auto mu = [&](double s) {
            auto [m1, m2] = lspace::mu_from_xieta(l_action(k, g, s)).chart_values();
            return Eigen::Vector4d(m1.real(), m1.imag(), m2.real(), m2.imag());
        };
        Eigen::Vector4d d;
        try {
            d = numdiff::central(mu, 0.0, 1e-5);
        } catch (const GeometryError&) {
            continue;
        }
        const LTangent K = l_killing_vector(induced_killing(k), lspace::mu_from_xieta(g));
        const Eigen::Vector4d Kv(K.a.real(), K.a.imag(), K.b.real(), K.b.imag());
        EXPECT_LT((d - Kv).norm(), 1e-6 * std::max(1.0, Kv.norm()));
        ++checked;
    }
}
