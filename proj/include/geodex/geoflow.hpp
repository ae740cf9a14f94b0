#pragma once

#include <vector>

#include "geodex/isometry.hpp"
#include "geodex/lspace.hpp"

namespace geodex::geoflow {

using hyp3::GeodesicUhs;
using isometry::HypKilling;
using isometry::LKilling;
using lspace::GeodesicGlobal;

class GeoParams {
public:
    GeoParams(cplx b1, cplx b2, cplx b3, cplx b4);
    cplx b1() const { return b_[0]; }
    cplx b2() const { return b_[1]; }
    cplx b3() const { return b_[2]; }
    cplx b4() const { return b_[3]; }

private:
    cplx b_[4];
};

// xi = conj(b3) sinh(w)/b2, eta = b4 - conj(b2) cosh(conj w)/(b3 sinh(conj w)), w = b2 t + b1
GeodesicUhs geodesic_G(const GeoParams& p, double t);
// (dxi/dt, deta/dt)
LTangent geodesic_G_velocity(const GeoParams& p, double t);

double tangent_norm_constant(const GeoParams& p);

GeodesicGlobal geodesic_G_mu(const GeoParams& p, double t);
// (dmu1/dt, dmu2/dt) from the closed-form derivative
LTangent geodesic_G_mu_velocity(const GeoParams& p, double t);

LKilling killing_of_geodesic(const GeoParams& p);

struct PathSample {
    double t;
    cplx xi, eta, dxi, deta;
};

// Integrates xi xi'' - xi'^2 + conj(eta')^2 xi^4 = 0, conj(xi) eta'' + 2 conj(xi') eta' = 0
// from t = 0 to each requested time (relative to the start).
std::vector<PathSample> integrate_geodesic_numeric(const GeodesicUhs& initial, const LTangent& velocity,
                                                   const std::vector<double>& times);
std::vector<PathSample> integrate_geodesic_numeric(const GeodesicUhs& initial, const LTangent& velocity,
                                                   double t_end, int samples = 101);

// Right-hand side of the system: (xi'', eta'') at (xi, eta, xi', eta').
std::pair<cplx, cplx> geodesic_acceleration(cplx xi, cplx eta, cplx dxi, cplx deta);

struct Normalizer {
    HypKilling k;
    double s = 1.0;
    bool identity = false;
};

Normalizer normalizing_isometry(const GeoParams& p);
GeoParams normalize_geodesic(const GeoParams& p);

} // namespace geodex::geoflow
