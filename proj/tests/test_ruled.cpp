#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "geodex/ruled.hpp"

using namespace geodex;
using namespace geodex::ruled;

namespace {
const cplx kDiag = std::polar(1.0, std::numbers::pi / 4);
}

TEST(SurfacePoint, UnitExample) {
    const UhsPoint p = surface_point(GeoParams(0.0, 1.0, 1.0, 0.0), 0.0, 1.0);
    EXPECT_NEAR(p.t(), 1.0 / std::sinh(1.0), 1e-15);
    EXPECT_NEAR(p.z().real(), -1.0 / std::tanh(1.0), 1e-15);
    EXPECT_NEAR(p.z().imag(), 0.0, 1e-15);
}

TEST(SurfacePoint, ApproachesSphereAtInfinity) {
    const GeoParams p(0.0, 1.0, 1.0, 0.0);
    for (double r : {-15.0, 15.0})
        EXPECT_GT(hyp3::uhs_to_ball(surface_point(p, r, 1.0)).y().norm(), 1.0 - 1e-6);
}

TEST(SurfacePatch, GridIsFinite) {
    const SurfacePatch s = sample_surface(GeoParams(0.0, 1.0, 1.0, 0.0), 50, 50);
    ASSERT_EQ(s.samples.size(), 2500u);
    for (const auto& q : s.samples) {
        EXPECT_TRUE(std::isfinite(q.x0));
        EXPECT_GT(q.x0, 0.0);
        EXPECT_LT(q.ball.norm(), 1.0);
    }
}

TEST(SecondForm, NullCasesVanish) {
    for (const cplx b2 : {cplx(1.0), I, cplx(2.0), cplx(0.0, 2.0)}) {
        const GeoParams p(0.0, b2, 1.0, 0.0);
        for (double r : {-1.0, 0.0, 1.5})
            for (double t : {0.4, 1.0}) {
                const SecondForm K = second_fundamental_form(p, r, t);
                EXPECT_EQ(K.Krr, 0.0);
                EXPECT_NEAR(K.Krt, 0.0, 1e-15);
                EXPECT_NEAR(K.Ktt, 0.0, 1e-15);
                const FundamentalForms n = numeric_forms(p, r, t);
                EXPECT_LT(std::max({std::abs(n.K.Krr), std::abs(n.K.Krt), std::abs(n.K.Ktt)}), 1e-9);
            }
    }
}

TEST(SecondForm, ClosedMatchesNumericOffNull) {
    const GeoParams p(0.0, kDiag, 1.0, 0.0);
    bool nonzero = false;
    for (double r : {-1.0, 0.0, 0.7})
        for (double t : {0.5, 1.0, 1.5}) {
            const SecondForm c = second_fundamental_form(p, r, t);
            const FundamentalForms n = numeric_forms(p, r, t);
            EXPECT_NEAR(n.K.Krr, 0.0, 1e-10);
            EXPECT_NEAR(c.Krt, n.K.Krt, 1e-4 * std::max(1.0, std::abs(c.Krt)));
            EXPECT_NEAR(c.Ktt, n.K.Ktt, 1e-4 * std::max(1.0, std::abs(c.Ktt)));
            nonzero |= std::abs(c.Krt) > 1e-3;
        }
    EXPECT_TRUE(nonzero);
}

TEST(MeanCurvature, Minimal) {
    for (const cplx b2 : {cplx(1.0), kDiag}) {
        const SurfacePatch s = sample_surface(GeoParams(0.0, b2, 1.0, 0.0), 24, 24);
        EXPECT_LT(s.max_abs_H(), 1e-6);
    }
    EXPECT_NEAR(mean_curvature_closed(GeoParams(0.2, kDiag, 1.3, 0.4), 0.3, 0.8), 0.0, 1e-12);
}

TEST(MeanCurvature, PerturbedRulingIsNotMinimal) {
    const GeoParams p(cplx(0.3, 0.4), kDiag, 1.0, 0.0);
    const SurfacePatch s = sample_surface(perturbed_ruling(p), 24, 24, {-3.0, 3.0}, {0.2, 2.0});
    EXPECT_GT(s.max_abs_H(), 1e-2);
}

TEST(TotallyGeodesic, Classification) {
    EXPECT_TRUE(is_totally_geodesic(GeoParams(0.0, 1.0, 1.0, 0.0)));
    EXPECT_TRUE(is_totally_geodesic(GeoParams(0.0, cplx(0.0, 2.0), 1.0, 0.0)));
    EXPECT_FALSE(is_totally_geodesic(GeoParams(0.0, cplx(1.0, 1.0), 1.0, 0.0)));
}

TEST(MSquared, PrintedVariantDiffersAwayFromZero) {
    const GeoParams p(0.0, kDiag, 1.0, 0.0);
    EXPECT_NEAR(m_squared(p, 0.0, 0.8), m_squared_as_printed(p, 0.0, 0.8), 1e-12);
    EXPECT_GT(std::abs(m_squared(p, 1.0, 0.8) - m_squared_as_printed(p, 1.0, 0.8)), 1e-6);
}

TEST(FiniteDifferences, AgreeWithJets) {
    const GeoParams p(cplx(0.1, 0.2), cplx(0.8, 0.5), cplx(1.1, -0.3), cplx(0.2, 0.1));
    auto curve = [&](double t) { return geoflow::geodesic_G(p, t); };
    const FundamentalForms a = numeric_forms(p, 0.4, 0.9);
    const FundamentalForms b = numeric_forms_fd(curve, 0.4, 0.9);
    EXPECT_NEAR(a.gtt, b.gtt, 1e-6 * std::abs(a.gtt));
    EXPECT_NEAR(a.K.Krt, b.K.Krt, 1e-5);
    EXPECT_NEAR(a.K.Ktt, b.K.Ktt, 1e-5);
}

TEST(Export, ObjAndCsvLayout) {
    const SurfacePatch s = sample_surface(GeoParams(0.0, 1.0, 1.0, 0.0), 3, 4);
    const std::string obj = to_obj(s);
    std::istringstream in(obj);
    std::string line;
    int v = 0, f = 0;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++v;
        if (line.rfind("f ", 0) == 0) ++f;
    }
    EXPECT_EQ(v, 12);
    EXPECT_EQ(f, 2 * 2 * 3);
    const std::string csv = to_csv(s);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "r,t,x,y,z,H,K_rt,K_tt");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
}

TEST(Errors, SampleSurfaceRejectsEmptyGrid) {
    try {
        sample_surface(GeoParams(0.0, 1.0, 1.0, 0.0), 0, 4);
        ADD_FAILURE();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::InvalidArgument);
    }
}
