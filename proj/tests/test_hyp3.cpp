#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "geodex/hyp3.hpp"
#include "geodex/numdiff.hpp"

using namespace geodex;
using namespace geodex::hyp3;

namespace {

void expect_vec(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double tol) {
    EXPECT_LT((a - b).norm(), tol) << a.transpose() << " vs " << b.transpose();
}

} // namespace

TEST(UhsToBall, CenterMapsToOrigin) {
    expect_vec(uhs_to_ball(UhsPoint(1.0, 0.0)).y(), Eigen::Vector3d::Zero(), 1e-15);
}

TEST(UhsToBall, HandValue) {
    expect_vec(uhs_to_ball(UhsPoint(1.0, 2.0)).y(), Eigen::Vector3d(0.5, 0.0, 0.5), 1e-15);
}

TEST(UhsToBall, RejectsNonPositiveHeight) {
    try {
        UhsPoint(0.0, 0.0);
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::InvalidPoint);
    }
    EXPECT_THROW(UhsPoint(-1.0, 0.0), GeometryError);
    EXPECT_THROW(UhsPoint(NAN, 0.0), GeometryError);
}

TEST(BallToUhs, Examples) {
    const UhsPoint a = ball_to_uhs(BallPoint(Eigen::Vector3d::Zero()));
    EXPECT_NEAR(a.t(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(a.z()), 0.0, 1e-15);
    const UhsPoint b = ball_to_uhs(BallPoint(Eigen::Vector3d(0.5, 0.0, 0.5)));
    EXPECT_NEAR(b.t(), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(b.z() - 2.0), 0.0, 1e-14);
    // (0, 0, -0.5) lies on the axis below the center: t = 1/3
    const UhsPoint c = ball_to_uhs(BallPoint(Eigen::Vector3d(0.0, 0.0, -0.5)));
    EXPECT_NEAR(c.t(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(std::abs(c.z()), 0.0, 1e-15);
    expect_vec(uhs_to_ball(c).y(), Eigen::Vector3d(0.0, 0.0, -0.5), 1e-15);
}

TEST(BallToUhs, Errors) {
    try {
        BallPoint(Eigen::Vector3d(1.0, 0.0, 0.0));
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::OutsideBall);
    }
    try {
        ball_to_uhs(BallPoint(Eigen::Vector3d(0.0, 0.0, 1.0 - 1e-16)));
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::NearBoundary);
    }
}

TEST(BallToUhs, RoundTrip) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2, 2), h(0.05, 4);
    for (int i = 0; i < 100; ++i) {
        const UhsPoint p(h(rng), cplx(u(rng), u(rng)));
        const UhsPoint q = ball_to_uhs(uhs_to_ball(p));
        EXPECT_LT((q.coords() - p.coords()).norm(), 1e-12 * p.coords().norm());
    }
}

TEST(GeodesicPoint, Examples) {
    const GeodesicUhs g(1.0, 0.0);
    const UhsPoint p = geodesic_point(g, 0.0);
    EXPECT_DOUBLE_EQ(p.t(), 1.0);
    EXPECT_EQ(p.z(), cplx(0.0));
    // endpoints of the unit semicircle
    const UhsPoint f = geodesic_point(g, 30.0), b = geodesic_point(g, -30.0);
    EXPECT_LT(f.t(), 1e-12);
    EXPECT_NEAR(std::abs(f.z() - 1.0), 0.0, 1e-12);
    EXPECT_LT(b.t(), 1e-12);
    EXPECT_NEAR(std::abs(b.z() + 1.0), 0.0, 1e-12);
}

TEST(GeodesicPoint, ChartU) {
    try {
        GeodesicUhs(0.0, 1.0);
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::OutsideChartU);
    }
}

TEST(VerticalGeodesic, Examples) {
    const UhsPoint a = vertical_geodesic(0, 0, 0);
    EXPECT_DOUBLE_EQ(a.t(), 1.0);
    EXPECT_EQ(a.z(), cplx(0.0));
    const UhsPoint b = vertical_geodesic(1, 2, std::log(2.0));
    EXPECT_NEAR(b.t(), 2.0, 1e-15);
    EXPECT_EQ(b.z(), cplx(1.0, 2.0));
}

TEST(VerticalGeodesic, UnitSpeed) {
    for (int i = 0; i < 20; ++i) {
        const double r = -2.0 + 0.2 * i;
        auto x = [](double s) { return vertical_geodesic(0.3, -0.7, s).coords(); };
        const Eigen::Vector3d v = numdiff::central4(x, r, 1e-3);
        EXPECT_NEAR(v.squaredNorm() / (x(r)[0] * x(r)[0]), 1.0, 1e-10);
    }
}

TEST(ConservedIntegrals, UnitSemicircle) {
    const GeodesicUhs g(1.0, 0.0);
    const double h = 1e-3;
    std::vector<UhsPoint> c;
    for (int k = 0; k <= 3000; ++k) c.push_back(geodesic_point(g, -1.5 + h * k));
    const Integrals in = conserved_integrals(c, h);
    for (std::size_t k = 0; k < c.size(); ++k) {
        EXPECT_NEAR(in.I1[k], 1.0, 1e-6);
        EXPECT_NEAR(in.I2[k], 0.0, 1e-6);
        EXPECT_NEAR(in.I3[k], 2.0, 1e-6);
    }
}

TEST(ConservedIntegrals, StraightSegmentIsNotAGeodesic) {
    std::vector<UhsPoint> c;
    for (int k = 0; k <= 100; ++k) c.push_back(UhsPoint(0.5 + 0.01 * k, cplx(0.01 * k, 0.0)));
    const Integrals in = conserved_integrals(c, 0.01);
    const auto [lo, hi] = std::minmax_element(in.I1.begin(), in.I1.end());
    EXPECT_GT(*hi - *lo, 1e-2);
}

TEST(ConservedIntegrals, TooFewSamples) {
    try {
        conserved_integrals({UhsPoint(1, 0), UhsPoint(2, 0)}, 0.1);
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::TooFewSamples);
    }
}

TEST(NullFrame, TangentAtOrigin) {
    const NullFrame f = adapted_null_frame(GeodesicUhs(1.0, 0.0), 0.0);
    EXPECT_NEAR(std::abs(f.e0.dz - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.e0.dzbar - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.e0.dt), 0.0, 1e-15);
}

TEST(NullFrame, InnerProducts) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 50; ++i) {
        const GeodesicUhs g(cplx(u(rng), u(rng)) + 1.5 * cplx(1.0, 0.0), cplx(u(rng), u(rng)));
        const double r = 2.0 * u(rng);
        const double t = geodesic_point(g, r).t();
        const NullFrame f = adapted_null_frame(g, r);
        const ZVec e[3] = {f.e0, f.ep, f.em};
        const double want[3][3] = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) EXPECT_LT(std::abs(metric(t, e[a], e[b]) - want[a][b]), 1e-12);
    }
}

TEST(FrameMatrix, InverseComposesToIdentity) {
    const GeodesicUhs g(cplx(0.7, -1.1), cplx(0.2, 0.5));
    const Eigen::Matrix3cd P = frame_matrix_inverse(g, 0.8) * frame_matrix(g, 0.8);
    EXPECT_LT((P - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Dphi, Examples) {
    const GeodesicUhs g(cplx(0.4, 0.9), cplx(-0.3, 0.2));
    const ZVec d = dphi(g, 0.7, PhiDirection{0.0, 0.0, 1.0, 0.0, 0.0});
    EXPECT_EQ(d.dz, cplx(1.0));
    EXPECT_EQ(d.dzbar, cplx(0.0));
    EXPECT_EQ(d.dt, cplx(0.0));
    const ZVec e = dphi(GeodesicUhs(1.0, 0.0), 0.0, PhiDirection{0.0, 0.0, 0.0, 0.0, 1.0});
    EXPECT_NEAR(std::abs(e.dz - 1.0) + std::abs(e.dzbar - 1.0) + std::abs(e.dt), 0.0, 1e-15);
}

TEST(JacobiField, CoefficientAtUnitXi) {
    // h(d/dxi) at xi = 1, r = 0 has e+ and e- coefficients -1/(2 sqrt 2)
    const GeodesicUhs g(1.0, 0.0);
    const ZVec h = jacobi_field(g, PhiDirection{1.0, 0.0, 0.0, 0.0, 0.0}, 0.0);
    const NullFrame f = adapted_null_frame(g, 0.0);
    const ZVec want = (f.ep + f.em) * (-1.0 / (2.0 * std::sqrt(2.0)));
    EXPECT_LT(std::abs(h.dz - want.dz) + std::abs(h.dzbar - want.dzbar) + std::abs(h.dt - want.dt), 1e-15);
}

TEST(JacobiField, OrthogonalToTangent) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 100; ++i) {
        const GeodesicUhs g(cplx(1.0 + 0.5 * u(rng), u(rng)), cplx(u(rng), u(rng)));
        const double r = 2.0 * u(rng);
        const ZVec h = jacobi_field(g, cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), r);
        const double t = geodesic_point(g, r).t();
        EXPECT_LT(std::abs(metric(t, h, adapted_null_frame(g, r).e0)), 1e-12);
    }
}

TEST(JacobiField, ChartMismatch) {
    try {
        jacobi_field(GeodesicUhs(1.0, 0.0), LTangent{Chart::Mu, 1.0, 0.0}, 0.0);
        FAIL();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.code(), Errc::ChartMismatch);
    }
}
