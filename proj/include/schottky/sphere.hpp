#pragma once

// Points on the Riemann sphere in homogeneous coordinates, and their
// lift to the unit sphere in R^3. Infinity is an ordinary point here.

#include <algorithm>
#include <cmath>
#include <optional>

#include "schottky/numeric.hpp"

namespace schottky {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 l, Vec3 r) { return {l.x + r.x, l.y + r.y, l.z + r.z}; }
    friend Vec3 operator-(Vec3 l, Vec3 r) { return {l.x - r.x, l.y - r.y, l.z - r.z}; }
    friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
};

inline double dot(Vec3 l, Vec3 r) { return l.x * r.x + l.y * r.y + l.z * r.z; }
inline Vec3 cross(Vec3 l, Vec3 r) {
    return {l.y * r.z - l.z * r.y, l.z * r.x - l.x * r.z, l.x * r.y - l.y * r.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(Vec3 v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}
// Robust angle in [0, pi] between unit vectors.
inline double angle_between(Vec3 u, Vec3 v) {
    return 2.0 * std::asin(std::min(1.0, 0.5 * norm(u - v)));
}

// Homogeneous pair (u : v); z = u/v, infinity = (1 : 0). Kept normalized
// so |u|^2 + |v|^2 = 1, which makes the chordal metric a plain cross term.
struct SpherePoint {
    Complex u{0.0, 0.0};
    Complex v{1.0, 0.0};

    static SpherePoint from(Complex z) { return make(z, Complex(1.0)); }
    static SpherePoint infinity() { return make(Complex(1.0), Complex(0.0)); }
    static SpherePoint make(Complex u, Complex v) {
        double s = std::sqrt(std::norm(u) + std::norm(v));
        return SpherePoint{u / s, v / s};
    }

    bool is_infinity(double eps = 1e-14) const { return std::abs(v) <= eps; }
    // Finite value; only meaningful when not at infinity.
    Complex value() const { return u / v; }
    std::optional<Complex> finite(double eps = 1e-14) const {
        if (is_infinity(eps)) return std::nullopt;
        return value();
    }
};

// Chordal distance on the unit sphere (diameter 2).
inline double chordal(const SpherePoint& p, const SpherePoint& q) {
    return 2.0 * std::abs(p.u * q.v - p.v * q.u);
}

inline Vec3 lift(const SpherePoint& p) {
    Complex uv = p.u * std::conj(p.v);
    return {2.0 * uv.real(), 2.0 * uv.imag(), std::norm(p.u) - std::norm(p.v)};
}

inline SpherePoint unlift(Vec3 n) {
    // stereographic from the north pole (0,0,1) <-> infinity
    if (n.z > 1.0 - 1e-14) return SpherePoint::infinity();
    return SpherePoint::from(Complex(n.x, n.y) / (1.0 - n.z));
}

} // namespace schottky
