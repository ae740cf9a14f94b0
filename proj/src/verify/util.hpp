#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "geodex/hyp3.hpp"
#include "geodex/verify.hpp"

namespace geodex::verify::detail {

inline double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

inline Eigen::Vector3cd cvec(const Eigen::Vector3d& x) { return x.cast<cplx>(); }

// Hermitian g-norm of a complexified vector given on the real basis at height x0.
inline double gnorm(double x0, const Eigen::Vector3cd& v) { return v.norm() / x0; }

inline Eigen::Vector3d coords_of(const hyp3::UhsPoint& p) { return p.coords(); }

// (Re a, Im a, Re b, Im b)
inline Eigen::Vector4d real4(cplx a, cplx b) { return {a.real(), a.imag(), b.real(), b.imag()}; }

inline LTangent ltangent(Chart c, const Eigen::Vector4d& v) {
    return {c, cplx(v[0], v[1]), cplx(v[2], v[3])};
}

inline Eigen::Vector4d real4(const LTangent& t) { return real4(t.a, t.b); }

inline Eigen::Vector4d random4(Sampler& rng) {
    return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

} // namespace geodex::verify::detail
