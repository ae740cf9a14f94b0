#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "geodex/geoflow.hpp"
#include "geodex/jet.hpp"

namespace geodex::ruled {

using geoflow::GeoParams;
using hyp3::GeodesicUhs;
using hyp3::UhsPoint;

using CJet = jet::Cx<jet::Jet2>;

// Ruling curve t -> (xi, eta) in chart U, evaluated on jets so the surface
// (r, t) -> Phi(xi(t), eta(t), r) can be differentiated exactly.
using JetCurve = std::function<std::pair<CJet, CJet>(const jet::Jet2& t)>;

JetCurve geodesic_ruling(const GeoParams& p);
// xi(t) = conj(b3) sinh(b2 t^2 + b1)/b2 with eta(t) unchanged: not a geodesic of G.
JetCurve perturbed_ruling(const GeoParams& p);

struct SecondForm {
    double Krr = 0, Krt = 0, Ktt = 0;
};

struct FundamentalForms {
    double grr = 0, grt = 0, gtt = 0;
    SecondForm K;
    double H = 0;
};

UhsPoint surface_point(const GeoParams& p, double r, double t);

// Closed forms (parameters are normalized internally; normalization is an isometry
// with zero shift in r).
SecondForm second_fundamental_form(const GeoParams& p, double r, double t);
FundamentalForms closed_form_forms(const GeoParams& p, double r, double t);
double m_squared(const GeoParams& p, double r, double t);
double m_squared_as_printed(const GeoParams& p, double r, double t);

// Numeric pipeline: exact derivatives of the parameterization by jets,
// Christoffel symbols of H^3, g-unit normal with (S_r, S_t, N) positive.
FundamentalForms numeric_forms(const JetCurve& curve, double r, double t);
FundamentalForms numeric_forms(const GeoParams& p, double r, double t);
// Same pipeline with fourth-order finite differences of surface points.
FundamentalForms numeric_forms_fd(const std::function<GeodesicUhs(double)>& curve, double r, double t,
                                  double h = 1e-3);

// H from the numeric pipeline.
double mean_curvature(const GeoParams& p, double r, double t);
// H from the closed-form fundamental forms (vanishes identically).
double mean_curvature_closed(const GeoParams& p, double r, double t);

bool is_totally_geodesic(const GeoParams& p);

struct SurfaceSample {
    double r, t;
    double x0;
    cplx z;
    Eigen::Vector3d ball;
    FundamentalForms numeric;
};

struct SurfacePatch {
    int nr = 0, nt = 0;
    std::pair<double, double> r_range{-5.0, 5.0}, t_range{0.2, 2.0};
    std::vector<SurfaceSample> samples;  // row-major in r, then t

    double max_abs_H() const;
    double max_abs_Krr() const;
    double max_abs_K() const;
};

SurfacePatch sample_surface(const JetCurve& curve, int nr, int nt, std::pair<double, double> r_range,
                            std::pair<double, double> t_range);
SurfacePatch sample_surface(const GeoParams& p, int nr = 64, int nt = 64,
                            std::pair<double, double> r_range = {-5.0, 5.0},
                            std::pair<double, double> t_range = {0.2, 2.0});

std::string to_obj(const SurfacePatch& patch);
std::string to_csv(const SurfacePatch& patch);

} // namespace geodex::ruled
