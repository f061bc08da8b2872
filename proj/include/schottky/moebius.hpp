#pragma once

// Conformal and anticonformal automorphisms of the Riemann sphere.
//
// A map is stored as a det-1 matrix M plus an orientation flag; it acts as
// z -> M*z when preserving and z -> M*conj(z) when reversing ("M acts on
// the conjugated variable"). With that convention, composing s after t
// conjugates M_t entrywise exactly when s reverses orientation.

#include <numeric>
#include <optional>
#include <vector>

#include "schottky/disc.hpp"
#include "schottky/errors.hpp"
#include "schottky/numeric.hpp"
#include "schottky/sphere.hpp"

namespace schottky {

struct ExtendedMoebius {
    Mat2 m = Mat2::identity();
    bool reversing = false;
    // Declared finite order, carried by constructors and verified there;
    // never inferred from near-rational rotation angles.
    std::optional<int> declared_order;
};

namespace detail {

// Sign convention: first nonzero entry of (a,b,c,d) has argument in
// (-pi/2, pi/2], so equal maps get equal matrices.
inline Mat2 canonical_sign(Mat2 m) {
    double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    const Complex entries[4] = {m.a, m.b, m.c, m.d};
    for (const Complex& e : entries) {
        if (std::abs(e) <= 1e-12 * scale) continue;
        bool flip = e.real() < -1e-14 * std::abs(e) ||
                    (std::abs(e.real()) <= 1e-14 * std::abs(e) && e.imag() < 0);
        if (flip) m = Complex(-1.0) * m;
        break;
    }
    return m;
}

inline Mat2 normalize_unimodular(Mat2 m, double det_eps = kDetEps) {
    Complex det = m.det();
    if (std::abs(det) <= det_eps) fail("SingularMatrix", "matrix determinant is zero");
    return canonical_sign((1.0 / std::sqrt(det)) * m);
}

// Long products of contracting maps converge projectively to rank-one
// matrices, where the determinant of the computed product is pure
// cancellation noise. Renormalize only while it is trustworthy; beyond
// that keep the matrix projective and bound its scale.
inline Mat2 compose_normalize(Mat2 p) {
    double m = std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c), std::abs(p.d)});
    if (!(m > 0)) fail("SingularMatrix", "zero product matrix");
    if (m > 1e8) p = Complex(1.0 / m) * p;
    Complex det = p.det();
    double ad = std::abs(det);
    if (ad >= 1e-8 && ad <= 1e8) p = (1.0 / std::sqrt(det)) * p;
    return canonical_sign(p);
}

} // namespace detail

inline ExtendedMoebius make_map(Complex a, Complex b, Complex c, Complex d, bool reversing,
                                std::optional<int> declared_order = std::nullopt) {
    return {detail::normalize_unimodular({a, b, c, d}), reversing, declared_order};
}
inline ExtendedMoebius make_map(const Mat2& m, bool reversing,
                                std::optional<int> declared_order = std::nullopt) {
    return {detail::normalize_unimodular(m), reversing, declared_order};
}

inline ExtendedMoebius identity_map() { return make_map(1, 0, 0, 1, false, 1); }
// J(z) = conj(z)
inline ExtendedMoebius conjugation_map() { return make_map(1, 0, 0, 1, true, 2); }

inline ExtendedMoebius compose(const ExtendedMoebius& s, const ExtendedMoebius& t) {
    Mat2 mt = s.reversing ? t.m.conjugated() : t.m;
    return {detail::compose_normalize(s.m * mt), s.reversing != t.reversing, std::nullopt};
}

inline ExtendedMoebius inverse(const ExtendedMoebius& t) {
    Mat2 inv = t.m.inv_unimodular();
    if (t.reversing) inv = inv.conjugated();
    return make_map(inv, t.reversing, t.declared_order);
}

inline ExtendedMoebius power(const ExtendedMoebius& t, long k) {
    if (k < 0) return power(inverse(t), -k);
    ExtendedMoebius acc = identity_map();
    ExtendedMoebius base = t;
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

inline SpherePoint apply(const ExtendedMoebius& t, const SpherePoint& p) {
    Complex u = p.u, v = p.v;
    if (t.reversing) {
        u = std::conj(u);
        v = std::conj(v);
    }
    return SpherePoint::make(t.m.a * u + t.m.b * v, t.m.c * u + t.m.d * v);
}
inline SpherePoint apply(const ExtendedMoebius& t, Complex z) {
    return apply(t, SpherePoint::from(z));
}

namespace detail {

inline Mat2 frobenius_normalized(const Mat2& m) {
    double f = m.frobenius();
    return Complex(std::sqrt(2.0) / f) * m;
}

} // namespace detail

// Distance to the identity up to projective scale; +inf-like for
// orientation-reversing maps which are never the identity. Agrees with
// the det-1 distance to first order near the identity and stays
// meaningful for long unnormalized products.
inline double identity_distance(const ExtendedMoebius& t) {
    if (t.reversing) return 4.0; // greater than any meaningful threshold
    return dist_pm(detail::frobenius_normalized(t.m), Mat2::identity());
}

inline bool is_identity(const ExtendedMoebius& t, double eps = kClassEps) {
    return identity_distance(t) <= eps;
}

inline bool same_map(const ExtendedMoebius& s, const ExtendedMoebius& t, double eps = kClassEps) {
    return s.reversing == t.reversing &&
           dist_pm(detail::frobenius_normalized(s.m), detail::frobenius_normalized(t.m)) <= eps;
}

// Smallest k in [1, max_k] with t^k = id, if any. This checks actual
// powers against the identity rather than estimating angles.
inline std::optional<int> detect_finite_order(const ExtendedMoebius& t, int max_k = 96,
                                              double eps = 1e-7) {
    ExtendedMoebius p = t;
    for (int k = 1; k <= max_k; ++k) {
        if (identity_distance(p) <= eps) return k;
        p = compose(p, t);
    }
    return std::nullopt;
}

// ---- circle transport ----

namespace detail {

inline Mat2 hermitian_of(const Disc& d) {
    // {v* G v >= 0} with v = (z, 1) homogeneous, unit axis scale
    double h = std::cos(d.alpha);
    return {Complex(d.n.z - h, 0), Complex(d.n.x, d.n.y), Complex(d.n.x, -d.n.y),
            Complex(-d.n.z - h, 0)};
}

} // namespace detail

inline Disc apply(const ExtendedMoebius& t, const Disc& d) {
    Mat2 g = detail::hermitian_of(d);
    if (t.reversing) g = g.conjugated();
    Mat2 minv = t.m.inv_unimodular(); // adjugate: projectively the inverse
    Mat2 gp = minv.adjoint() * g * minv;
    Vec3 n{gp.b.real(), gp.b.imag(), 0.5 * (gp.a.real() - gp.d.real())};
    double h = -0.5 * (gp.a.real() + gp.d.real());
    double s = norm(n);
    if (!(s > 0)) fail("DegenerateCircle", "transported circle collapsed");
    // radius through the determinant identity det(G') = |det M^-1|^2 det(G)
    // with det(G) = -sin^2(alpha); no cancellation even for tiny discs.
    double sin_alpha = std::sin(d.alpha);
    double q = std::norm(minv.det()) * sin_alpha * sin_alpha;
    double alpha = std::atan2(std::sqrt(q), h);
    return Disc{{n.x / s, n.y / s, n.z / s}, alpha};
}

inline GeneralizedCircle apply_to_circle(const ExtendedMoebius& t, const GeneralizedCircle& c) {
    return to_circle(apply(t, to_disc(c)));
}

// ---- classification ----

struct TransformClass {
    enum class Tag {
        Identity,
        Elliptic,
        Parabolic,
        Loxodromic,
        Reflection,
        ImaginaryReflection,
        PseudoElliptic,
        GlideReflection,
        PseudoParabolic,
    };
    Tag tag = Tag::Identity;
    double rotation_angle = 0;         // Elliptic: angle in (0, pi]
    std::optional<int> order;          // Elliptic / PseudoElliptic finite order
    double multiplier_modulus = 0;     // Loxodromic: |multiplier| > 1
};

inline const char* to_string(TransformClass::Tag tag) {
    switch (tag) {
        case TransformClass::Tag::Identity: return "identity";
        case TransformClass::Tag::Elliptic: return "elliptic";
        case TransformClass::Tag::Parabolic: return "parabolic";
        case TransformClass::Tag::Loxodromic: return "loxodromic";
        case TransformClass::Tag::Reflection: return "reflection";
        case TransformClass::Tag::ImaginaryReflection: return "imaginary-reflection";
        case TransformClass::Tag::PseudoElliptic: return "pseudo-elliptic";
        case TransformClass::Tag::GlideReflection: return "glide-reflection";
        case TransformClass::Tag::PseudoParabolic: return "pseudo-parabolic";
    }
    return "?";
}

namespace detail {

inline std::optional<int> known_order(const ExtendedMoebius& t) {
    if (t.declared_order) return t.declared_order;
    return detect_finite_order(t);
}

inline TransformClass classify_conformal(const ExtendedMoebius& t, double eps) {
    TransformClass out;
    if (is_identity(t, eps)) {
        out.tag = TransformClass::Tag::Identity;
        return out;
    }
    Complex w = t.m.trace() * t.m.trace() / t.m.det(); // trace squared, scale-free
    double dist_four = std::abs(w - 4.0);
    double seg = std::clamp(w.real(), 0.0, 4.0);
    double dist_segment = std::abs(w - seg);
    if (dist_four <= eps) {
        out.tag = TransformClass::Tag::Parabolic;
        return out;
    }
    if (dist_segment <= eps) {
        out.tag = TransformClass::Tag::Elliptic;
        double x = std::clamp(w.real(), 0.0, 4.0);
        out.rotation_angle = 2.0 * std::acos(std::sqrt(x) / 2.0);
        out.order = known_order(t);
        return out;
    }
    if (std::min(dist_four, dist_segment) <= kAmbiguityBand * eps)
        fail("NumericallyAmbiguous",
             "trace squared lies near a class boundary; supply an exact class or a larger "
             "tolerance");
    out.tag = TransformClass::Tag::Loxodromic;
    Complex s = std::sqrt(w * (w - 4.0));
    Complex kappa = 0.5 * (w - 2.0 + s);
    double mod = std::abs(kappa);
    out.multiplier_modulus = std::max(mod, mod > 0 ? 1.0 / mod : 0.0);
    return out;
}

} // namespace detail

inline TransformClass classify(const ExtendedMoebius& t, double eps = kClassEps) {
    if (!t.reversing) return detail::classify_conformal(t, eps);

    TransformClass out;
    // square of a reversing map: matrix M * conj(M), orientation preserving
    Mat2 q = t.m * t.m.conjugated();
    double d_plus = dist(q, Mat2::identity());
    double d_minus = (q + Mat2::identity()).frobenius();
    if (std::min(d_plus, d_minus) <= eps) {
        // involution; the sign of M*conj(M) separates the two kinds
        out.tag = d_plus <= d_minus ? TransformClass::Tag::Reflection
                                    : TransformClass::Tag::ImaginaryReflection;
        return out;
    }
    if (std::min(d_plus, d_minus) <= kAmbiguityBand * eps)
        fail("NumericallyAmbiguous", "square is near the identity; classification unstable");

    TransformClass sq = detail::classify_conformal(make_map(q, false), eps);
    switch (sq.tag) {
        case TransformClass::Tag::Elliptic:
            out.tag = TransformClass::Tag::PseudoElliptic;
            out.order = detail::known_order(t);
            if (!out.order && sq.order) out.order = 2 * *sq.order;
            return out;
        case TransformClass::Tag::Loxodromic:
            out.tag = TransformClass::Tag::GlideReflection;
            return out;
        case TransformClass::Tag::Parabolic:
            out.tag = TransformClass::Tag::PseudoParabolic;
            return out;
        default:
            fail("NumericallyAmbiguous", "square classification degenerate");
    }
}

// ---- fixed point sets ----

struct FixedSet {
    enum class Kind { Empty, Point, PointPair, Circle };
    Kind kind = Kind::Empty;
    SpherePoint p1, p2;          // Point / PointPair
    GeneralizedCircle circle;    // Circle (a reflection's mirror)
};

namespace detail {

inline SpherePoint eigen_point(const Mat2& m, Complex lambda) {
    // (m - lambda I) v = 0; take the better conditioned kernel vector
    Complex v1u = m.b, v1v = lambda - m.a;
    Complex v2u = lambda - m.d, v2v = m.c;
    double n1 = std::norm(v1u) + std::norm(v1v);
    double n2 = std::norm(v2u) + std::norm(v2v);
    if (n1 >= n2) return SpherePoint::make(v1u, v1v);
    return SpherePoint::make(v2u, v2v);
}

inline bool lift_less(const SpherePoint& a, const SpherePoint& b) {
    Vec3 u = lift(a), v = lift(b);
    if (u.x != v.x) return u.x < v.x;
    if (u.y != v.y) return u.y < v.y;
    return u.z < v.z;
}

} // namespace detail

inline FixedSet fixed_set(const ExtendedMoebius& t, double eps = kClassEps) {
    FixedSet out;
    if (!t.reversing) {
        if (is_identity(t, eps)) fail("IdentityInput", "the identity fixes everything");
        Complex tr = t.m.trace();
        Complex disc = tr * tr - 4.0;
        if (std::abs(disc) <= eps) {
            out.kind = FixedSet::Kind::Point;
            out.p1 = detail::eigen_point(t.m, 0.5 * tr);
            return out;
        }
        Complex s = std::sqrt(disc);
        SpherePoint a = detail::eigen_point(t.m, 0.5 * (tr + s));
        SpherePoint b = detail::eigen_point(t.m, 0.5 * (tr - s));
        out.kind = FixedSet::Kind::PointPair;
        if (detail::lift_less(b, a)) std::swap(a, b);
        out.p1 = a;
        out.p2 = b;
        return out;
    }

    Mat2 q = t.m * t.m.conjugated();
    double d_plus = dist(q, Mat2::identity());
    double d_minus = (q + Mat2::identity()).frobenius();
    if (d_plus <= eps) {
        // reflection: t(z) = z is c|z|^2 + dz - a z' - b = 0; times i it is Hermitian
        const Complex i{0, 1};
        GeneralizedCircle c;
        c.A = (i * t.m.c).real();
        c.B = 0.5 * (-i * t.m.a + std::conj(i * t.m.d));
        c.C = (-i * t.m.b).real();
        c.side = 1;
        out.kind = FixedSet::Kind::Circle;
        out.circle = normalized(c);
        return out;
    }
    if (d_minus <= eps) {
        out.kind = FixedSet::Kind::Empty; // imaginary reflection
        return out;
    }
    // Fixed points of t sit among the fixed points of its square.
    FixedSet sq = fixed_set(make_map(q, false), eps);
    std::vector<SpherePoint> kept;
    auto consider = [&](const SpherePoint& p) {
        if (chordal(apply(t, p), p) <= 1e-6) kept.push_back(p);
    };
    if (sq.kind == FixedSet::Kind::Point) consider(sq.p1);
    if (sq.kind == FixedSet::Kind::PointPair) {
        consider(sq.p1);
        consider(sq.p2);
    }
    if (kept.empty()) {
        out.kind = FixedSet::Kind::Empty;
    } else if (kept.size() == 1) {
        out.kind = FixedSet::Kind::Point;
        out.p1 = kept[0];
    } else {
        out.kind = FixedSet::Kind::PointPair;
        out.p1 = kept[0];
        out.p2 = kept[1];
    }
    return out;
}

// ---- canonical sphere motions and disc frames ----

namespace detail {

inline ExtendedMoebius rotation_about(Vec3 axis, double angle) {
    double ch = std::cos(0.5 * angle), sh = std::sin(0.5 * angle);
    return make_map(Complex(ch, sh * axis.z), Complex(-sh * axis.y, sh * axis.x),
                    Complex(sh * axis.y, sh * axis.x), Complex(ch, -sh * axis.z), false);
}

} // namespace detail

// Rotation of the sphere (as a conformal map) carrying unit vector u to v.
inline ExtendedMoebius rotation_taking(Vec3 u, Vec3 v) {
    double c = dot(u, v);
    Vec3 axis = cross(u, v);
    double s = norm(axis);
    if (s <= 1e-14) {
        if (c > 0) return identity_map();
        // antipodal: rotate by pi about a deterministic axis orthogonal to u
        Vec3 ref = std::abs(u.y) <= 0.9 ? Vec3{0, 1, 0} : Vec3{1, 0, 0};
        return detail::rotation_about(normalized(cross(u, ref)), M_PI);
    }
    return detail::rotation_about(normalized(axis), std::atan2(s, c));
}

inline ExtendedMoebius scaling_map(Complex factor) { return make_map(factor, 0, 0, 1, false); }

// Canonical conformal map taking the closed unit disc onto the given disc.
inline ExtendedMoebius disc_frame(const Disc& d) {
    double alpha = d.angular_radius();
    ExtendedMoebius shrink = scaling_map(std::tan(0.5 * alpha));
    ExtendedMoebius rot = rotation_taking({0, 0, -1}, d.n);
    return compose(rot, shrink);
}

// Canonical conformal map taking disc `from` onto disc `to` (sides included).
inline ExtendedMoebius disc_map(const Disc& from, const Disc& to) {
    return compose(disc_frame(to), inverse(disc_frame(from)));
}

// Reflection fixing the boundary of `mirror` pointwise and swapping its sides.
inline ExtendedMoebius reflection_in(const Disc& mirror) {
    ExtendedMoebius frame = disc_map(lower_half_plane(), mirror);
    ExtendedMoebius r = compose(compose(frame, conjugation_map()), inverse(frame));
    r.declared_order = 2;
    return r;
}

// Loxodromic with repelling point p, attracting point q, multiplier lambda
// (|lambda| > 1): conjugate of z -> lambda z by the map sending 0,inf to p,q.
inline ExtendedMoebius frame_through(const SpherePoint& p, const SpherePoint& q) {
    // columns are homogeneous representatives of the images of 0 and inf
    return make_map(q.u, p.u, q.v, p.v, false);
}

inline ExtendedMoebius loxodromic_fixing(const SpherePoint& p, const SpherePoint& q,
                                         Complex lambda) {
    if (std::abs(lambda) <= 1.0 + 1e-9) fail("InvalidParameter", "multiplier modulus must exceed 1");
    ExtendedMoebius f = frame_through(p, q);
    return compose(compose(f, scaling_map(lambda)), inverse(f));
}

inline ExtendedMoebius elliptic_fixing(const SpherePoint& p, const SpherePoint& q, int order,
                                       int turns = 1) {
    if (order < 2) fail("InvalidOrder", "elliptic order must be at least 2");
    double theta = 2.0 * M_PI * turns / order;
    ExtendedMoebius f = frame_through(p, q);
    ExtendedMoebius e = compose(compose(f, scaling_map(std::polar(1.0, theta))), inverse(f));
    e.declared_order = order / std::gcd(order, turns);
    return e;
}

// Uniformly-ish distributed conformal map for property sweeps.
inline ExtendedMoebius random_conformal(Rng& rng) {
    for (;;) {
        Mat2 m{rng.complex_in_box(1.0), rng.complex_in_box(1.0), rng.complex_in_box(1.0),
               rng.complex_in_box(1.0)};
        if (std::abs(m.det()) >= 0.05) return make_map(m, false);
    }
}

} // namespace schottky
