#pragma once

#include <cmath>
#include <complex>

namespace geodex::jet {

// Extended precision: second fundamental forms of strongly stretched patches cancel
// terms of size |S_t|^2 / x0.
using real = long double;

// Second-order forward-mode jet in two variables (r, t): value, gradient, Hessian.
struct Jet2 {
    real v = 0;
    real d[2] = {0, 0};
    real h[3] = {0, 0, 0};  // rr, rt, tt

    Jet2() = default;
    Jet2(real x) : v(x) {}

    static Jet2 variable(real x, int i) {
        Jet2 j(x);
        j.d[i] = 1.0;
        return j;
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r(a.v + b.v);
    for (int i = 0; i < 2; ++i) r.d[i] = a.d[i] + b.d[i];
    for (int i = 0; i < 3; ++i) r.h[i] = a.h[i] + b.h[i];
    return r;
}

inline Jet2 operator-(const Jet2& a) {
    Jet2 r(-a.v);
    for (int i = 0; i < 2; ++i) r.d[i] = -a.d[i];
    for (int i = 0; i < 3; ++i) r.h[i] = -a.h[i];
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.v * b.v);
    r.d[0] = a.d[0] * b.v + a.v * b.d[0];
    r.d[1] = a.d[1] * b.v + a.v * b.d[1];
    r.h[0] = a.h[0] * b.v + 2 * a.d[0] * b.d[0] + a.v * b.h[0];
    r.h[1] = a.h[1] * b.v + a.d[0] * b.d[1] + a.d[1] * b.d[0] + a.v * b.h[1];
    r.h[2] = a.h[2] * b.v + 2 * a.d[1] * b.d[1] + a.v * b.h[2];
    return r;
}

// f(a) given f, f', f'' at a.v
inline Jet2 chain(const Jet2& a, real f, real f1, real f2) {
    Jet2 r(f);
    r.d[0] = f1 * a.d[0];
    r.d[1] = f1 * a.d[1];
    r.h[0] = f2 * a.d[0] * a.d[0] + f1 * a.h[0];
    r.h[1] = f2 * a.d[0] * a.d[1] + f1 * a.h[1];
    r.h[2] = f2 * a.d[1] * a.d[1] + f1 * a.h[2];
    return r;
}

inline Jet2 recip(const Jet2& a) {
    const real i = 1 / a.v;
    return chain(a, i, -i * i, 2 * i * i * i);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

inline Jet2 sqrt(const Jet2& a) {
    const real s = std::sqrt(a.v);
    return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline Jet2 exp(const Jet2& a) {
    const real e = std::exp(a.v);
    return chain(a, e, e, e);
}

inline Jet2 sin(const Jet2& a) { return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet2 cos(const Jet2& a) { return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet2 sinh(const Jet2& a) { return chain(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Jet2 cosh(const Jet2& a) { return chain(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }

inline Jet2 tanh(const Jet2& a) {
    const real t = std::tanh(a.v);
    const real s = 1 - t * t;
    return chain(a, t, s, -2 * t * s);
}

inline real value(const Jet2& a) { return a.v; }
inline real value(real a) { return a; }

// Minimal complex number over a real scalar type T.
template <class T>
struct Cx {
    T re, im;

    Cx() : re(0.0), im(0.0) {}
    Cx(T r) : re(r), im(0.0) {}
    Cx(T r, T i) : re(r), im(i) {}
    template <class U>
    static Cx from(const std::complex<U>& z) { return {T(z.real()), T(z.imag())}; }
};

template <class T> Cx<T> operator+(const Cx<T>& a, const Cx<T>& b) { return {a.re + b.re, a.im + b.im}; }
template <class T> Cx<T> operator-(const Cx<T>& a, const Cx<T>& b) { return {a.re - b.re, a.im - b.im}; }
template <class T> Cx<T> operator-(const Cx<T>& a) { return {-a.re, -a.im}; }
template <class T> Cx<T> operator*(const Cx<T>& a, const Cx<T>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T> Cx<T> conj(const Cx<T>& a) { return {a.re, -a.im}; }
template <class T> T norm(const Cx<T>& a) { return a.re * a.re + a.im * a.im; }
template <class T> T abs(const Cx<T>& a) { using std::sqrt; using jet::sqrt; return sqrt(norm(a)); }
template <class T> Cx<T> recip(const Cx<T>& a) {
    const T n = norm(a);
    return {a.re / n, -a.im / n};
}
template <class T> Cx<T> operator/(const Cx<T>& a, const Cx<T>& b) { return a * recip(b); }
template <class T> Cx<T> scale(const Cx<T>& a, const T& s) { return {a.re * s, a.im * s}; }

template <class T> Cx<T> sinh(const Cx<T>& a) {
    using std::cos; using std::sin; using std::cosh; using std::sinh;
    using jet::cos; using jet::sin; using jet::cosh; using jet::sinh;
    return {sinh(a.re) * cos(a.im), cosh(a.re) * sin(a.im)};
}
template <class T> Cx<T> cosh(const Cx<T>& a) {
    using std::cos; using std::sin; using std::cosh; using std::sinh;
    using jet::cos; using jet::sin; using jet::cosh; using jet::sinh;
    return {cosh(a.re) * cos(a.im), sinh(a.re) * sin(a.im)};
}

} // namespace geodex::jet
