#pragma once

// Circles on the Riemann sphere with a chosen disc side.
//
// Externally a circle is the Hermitian form A|z|^2 + B z' + B' z + C = 0
// (z' the conjugate) plus a side flag. Internally a closed disc is a
// spherical cap {x in S^2 : n.x >= h}, |n| = 1, |h| < 1, which makes
// containment, disjointness and diameters one-line angle computations.

#include <array>
#include <cmath>
#include <vector>

#include "schottky/errors.hpp"
#include "schottky/numeric.hpp"
#include "schottky/sphere.hpp"

namespace schottky {

struct Disc {
    Vec3 n{0, 0, -1};        // unit axis (cap pole)
    double alpha = M_PI / 2; // angular radius in (0, pi)

    double angular_radius() const { return alpha; }
    double h() const { return std::cos(alpha); } // plane offset cos(alpha)
    Disc complement() const { return {-n, M_PI - alpha}; }
    SpherePoint center() const { return unlift(n); }

    static Disc unit_disc() { return Disc{{0, 0, -1}, M_PI / 2}; }
};

// External Hermitian representation; side = +1 selects {form >= 0},
// side = -1 selects {form <= 0}. Normalized: max(|A|,|B|,|C|) = 1 and the
// first nonzero of (A, Re B, Im B, C) is positive.
struct GeneralizedCircle {
    double A = 0;
    Complex B{0, 0};
    double C = 0;
    int side = 1;
};

inline GeneralizedCircle normalized(GeneralizedCircle c) {
    double m = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C)});
    if (m <= 0) fail("DegenerateCircle", "zero coefficient vector");
    c.A /= m;
    c.B /= m;
    c.C /= m;
    const double entries[4] = {c.A, c.B.real(), c.B.imag(), c.C};
    for (double e : entries) {
        if (std::abs(e) <= 1e-14) continue;
        if (e < 0) {
            c.A = -c.A;
            c.B = -c.B;
            c.C = -c.C;
            c.side = -c.side;
        }
        break;
    }
    return c;
}

inline Disc to_disc(const GeneralizedCircle& c) {
    Vec3 n{c.B.real(), c.B.imag(), 0.5 * (c.A - c.C)};
    double h = -0.5 * (c.A + c.C);
    if (c.side < 0) {
        n = -n;
        h = -h;
    }
    double s = norm(n);
    // sin^2 of the angular radius times s^2; invariant under the side flip
    double q = std::norm(c.B) - c.A * c.C;
    double scale = std::abs(c.A) + std::abs(c.B) + std::abs(c.C);
    if (!(q > scale * scale * 1e-14))
        fail("DegenerateCircle", "form has empty or point solution locus");
    double alpha = std::atan2(std::sqrt(q), h);
    return Disc{{n.x / s, n.y / s, n.z / s}, alpha};
}

inline GeneralizedCircle to_circle(const Disc& d) {
    GeneralizedCircle c;
    double h = d.h();
    c.A = d.n.z - h;
    c.B = Complex(d.n.x, d.n.y);
    c.C = -d.n.z - h;
    c.side = 1;
    return normalized(c);
}

// ---- point membership ----

// Signed margin: positive inside, zero on the boundary, negative outside,
// measured in radians from the boundary along the sphere.
inline double signed_margin(const Disc& d, const SpherePoint& p) {
    return d.angular_radius() - angle_between(d.n, lift(p));
}
inline bool contains(const Disc& d, const SpherePoint& p, double slack = 1e-9) {
    return signed_margin(d, p) >= -slack;
}

// ---- disc/disc predicates (angles, all in radians) ----

inline double axis_angle(const Disc& a, const Disc& b) { return angle_between(a.n, b.n); }

// > 0 iff the closed discs are disjoint; the angular gap between them.
inline double separation(const Disc& a, const Disc& b) {
    return axis_angle(a, b) - a.angular_radius() - b.angular_radius();
}
inline bool disjoint(const Disc& a, const Disc& b, double margin = 0.0) {
    return separation(a, b) > margin;
}

// > 0 iff a lies strictly inside b.
inline double containment_margin(const Disc& a, const Disc& b) {
    return b.angular_radius() - a.angular_radius() - axis_angle(a, b);
}
inline bool contained_in(const Disc& a, const Disc& b, double margin = 0.0) {
    return containment_margin(a, b) > margin;
}

inline bool same_disc(const Disc& a, const Disc& b, double eps = 1e-9) {
    return norm(a.n - b.n) <= eps && std::abs(a.alpha - b.alpha) <= eps;
}
// Same boundary circle, either side.
inline bool same_circle(const Disc& a, const Disc& b, double eps = 1e-9) {
    return same_disc(a, b, eps) || same_disc(a, b.complement(), eps);
}

// Max chordal distance between two points of the closed disc.
inline double chordal_diameter(const Disc& d) {
    double alpha = d.angular_radius();
    if (alpha >= 0.5 * M_PI) return 2.0;
    return 2.0 * std::sin(alpha);
}

// ---- constructions and samples ----

inline Disc disc_from_center_radius(Complex center, double radius, bool inside) {
    if (!(radius > 0)) fail("DegenerateCircle", "radius must be positive");
    // |z - c|^2 <= r^2  <=>  -(|z|^2 - c'z - cz' + |c|^2 - r^2) >= 0
    GeneralizedCircle c;
    c.A = -1;
    c.B = center;
    c.C = radius * radius - std::norm(center);
    c.side = inside ? 1 : -1;
    return to_disc(normalized(c));
}

// Half-plane {Im((z - p) / dir) side-of 0} is not needed; lines enter via
// Hermitian forms with A = 0 (e.g. the extended real axis below).
inline Disc lower_half_plane() { return Disc{{0, -1, 0}, M_PI / 2}; }

inline std::array<Vec3, 2> tangent_frame(Vec3 n) {
    Vec3 ref = std::abs(n.x) <= std::abs(n.y)
                   ? (std::abs(n.x) <= std::abs(n.z) ? Vec3{1, 0, 0} : Vec3{0, 0, 1})
                   : (std::abs(n.y) <= std::abs(n.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    Vec3 e1 = normalized(cross(n, ref));
    Vec3 e2 = cross(n, e1);
    return {e1, e2};
}

inline std::vector<SpherePoint> boundary_points(const Disc& d, int count) {
    auto [e1, e2] = tangent_frame(d.n);
    double s = std::sin(d.alpha), h = std::cos(d.alpha);
    std::vector<SpherePoint> pts;
    pts.reserve(count);
    for (int k = 0; k < count; ++k) {
        double t = 2.0 * M_PI * k / count;
        Vec3 x = h * d.n + s * (std::cos(t) * e1 + std::sin(t) * e2);
        pts.push_back(unlift(x));
    }
    return pts;
}

// Euclidean view of the boundary, for rendering. A circle through the
// north pole projects to a line.
struct EuclideanCircle {
    bool is_line = false;
    Complex center{0, 0}; // circle case
    double radius = 0;
    Complex line_point{0, 0}; // line case: point + direction
    Complex line_dir{1, 0};
};

inline EuclideanCircle to_euclidean(const Disc& d) {
    GeneralizedCircle c = to_circle(d);
    EuclideanCircle e;
    if (std::abs(c.A) <= 1e-12 * std::max(1.0, std::abs(c.B))) {
        // B z' + B' z + C = 0: a line
        e.is_line = true;
        e.line_point = -0.5 * c.C * c.B / std::norm(c.B);
        e.line_dir = Complex(0, 1) * c.B / std::abs(c.B);
        return e;
    }
    e.center = -c.B / c.A;
    double r2 = (std::norm(c.B) - c.A * c.C) / (c.A * c.A);
    e.radius = std::sqrt(std::max(0.0, r2));
    return e;
}

} // namespace schottky
