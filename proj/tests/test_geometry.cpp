#include <catch2/catch_amalgamated.hpp>

#include "schottky/disc.hpp"
#include "schottky/moebius.hpp"

using namespace schottky;

TEST_CASE("sphere points and chordal metric") {
    SpherePoint zero = SpherePoint::from(0.0);
    SpherePoint inf = SpherePoint::infinity();
    CHECK(chordal(zero, inf) == Catch::Approx(2.0));
    CHECK(chordal(SpherePoint::from(1.0), SpherePoint::from(1.0)) == Catch::Approx(0.0).margin(1e-15));
    // lift round trips
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        SpherePoint p = SpherePoint::from(rng.complex_in_box(5.0));
        SpherePoint q = unlift(lift(p));
        CHECK(chordal(p, q) < 1e-12);
    }
    CHECK(lift(inf).z == Catch::Approx(1.0));
    CHECK(lift(zero).z == Catch::Approx(-1.0));
}

TEST_CASE("disc representations round trip") {
    Disc unit = disc_from_center_radius(0.0, 1.0, true);
    CHECK(contains(unit, SpherePoint::from(0.0)));
    CHECK(contains(unit, SpherePoint::from(Complex(0.99, 0))));
    CHECK(!contains(unit, SpherePoint::from(Complex(1.01, 0))));
    CHECK(!contains(unit, SpherePoint::infinity()));

    Disc outside = disc_from_center_radius(Complex(2, 1), 0.5, false);
    CHECK(contains(outside, SpherePoint::infinity()));
    CHECK(!contains(outside, SpherePoint::from(Complex(2, 1))));

    // circle <-> disc conversions preserve the locus and the side
    for (const Disc& d : {unit, outside, disc_from_center_radius(Complex(-3, 4), 2.5, true)}) {
        Disc back = to_disc(to_circle(d));
        CHECK(same_disc(d, back, 1e-12));
    }

    // normalization: max coefficient 1, deterministic sign
    GeneralizedCircle c = to_circle(unit);
    double m = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C)});
    CHECK(m == Catch::Approx(1.0));
}

TEST_CASE("disc predicates") {
    Disc a = disc_from_center_radius(0.0, 1.0, true);
    Disc b = disc_from_center_radius(5.0, 1.0, true);
    Disc inner = disc_from_center_radius(Complex(0.1, 0), 0.5, true);
    CHECK(disjoint(a, b));
    CHECK(separation(a, b) > 0.1);
    CHECK(contained_in(inner, a));
    CHECK(!contained_in(a, inner));
    CHECK(!disjoint(a, inner));
    CHECK(contained_in(a.complement().complement(), a, 0.0) == false); // equal, not strict
    CHECK(same_circle(a, a.complement()));
    CHECK(!same_disc(a, a.complement()));

    // hemispheres and diameters
    CHECK(chordal_diameter(a) == Catch::Approx(2.0)); // unit disc is a hemisphere
    Disc small = disc_from_center_radius(0.0, 0.1, true);
    CHECK(chordal_diameter(small) < 0.45);
    Disc big = small.complement();
    CHECK(chordal_diameter(big) == Catch::Approx(2.0));
}

TEST_CASE("boundary samples lie on the circle") {
    Disc d = disc_from_center_radius(Complex(2, -1), 1.5, true);
    for (const SpherePoint& p : boundary_points(d, 12)) {
        CHECK(std::abs(signed_margin(d, p)) < 1e-12);
        auto z = p.finite();
        REQUIRE(z.has_value());
        CHECK(std::abs(*z - Complex(2, -1)) == Catch::Approx(1.5).margin(1e-9));
    }
}

TEST_CASE("euclidean extraction") {
    Disc d = disc_from_center_radius(Complex(2, -1), 1.5, true);
    EuclideanCircle e = to_euclidean(d);
    REQUIRE(!e.is_line);
    CHECK(std::abs(e.center - Complex(2, -1)) < 1e-9);
    CHECK(e.radius == Catch::Approx(1.5));

    // the extended real axis as the boundary of the lower half plane
    EuclideanCircle line = to_euclidean(lower_half_plane());
    CHECK(line.is_line);
    CHECK(std::abs(line.line_point.imag()) < 1e-12);
}

TEST_CASE("rotations act as sphere rotations") {
    Rng rng(11);
    for (int k = 0; k < 30; ++k) {
        Vec3 u = normalized(Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        Vec3 v = normalized(Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        ExtendedMoebius r = rotation_taking(u, v);
        CHECK(norm(lift(apply(r, unlift(u))) - v) < 1e-9);
        // rotations preserve the chordal metric
        SpherePoint p = SpherePoint::from(rng.complex_in_box(2.0));
        SpherePoint q = SpherePoint::from(rng.complex_in_box(2.0));
        CHECK(chordal(apply(r, p), apply(r, q)) == Catch::Approx(chordal(p, q)).margin(1e-9));
    }
    // antipodal special case
    ExtendedMoebius flip = rotation_taking({0, 0, -1}, {0, 0, 1});
    CHECK(norm(lift(apply(flip, SpherePoint::from(0.0))) - Vec3{0, 0, 1}) < 1e-9);
}

TEST_CASE("disc maps carry discs onto discs") {
    Rng rng(3);
    for (int k = 0; k < 25; ++k) {
        Disc from = disc_from_center_radius(rng.complex_in_box(3.0), rng.uniform(0.2, 2.0),
                                            rng.uniform() < 0.5);
        Disc to = disc_from_center_radius(rng.complex_in_box(3.0), rng.uniform(0.2, 2.0),
                                          rng.uniform() < 0.5);
        ExtendedMoebius g = disc_map(from, to);
        CHECK(same_disc(apply(g, from), to, 1e-7));
    }
}

TEST_CASE("circle transport matches pointwise images") {
    // apply_to_circle commutes with evaluate on sampled points
    Rng rng(19);
    for (int k = 0; k < 100; ++k) {
        ExtendedMoebius t = random_conformal(rng);
        if (rng.uniform() < 0.5) t = compose(t, conjugation_map());
        Disc d = disc_from_center_radius(rng.complex_in_box(2.0), rng.uniform(0.3, 2.0),
                                         rng.uniform() < 0.5);
        Disc image = apply(t, d);
        for (const SpherePoint& p : boundary_points(d, 8))
            CHECK(std::abs(signed_margin(image, apply(t, p))) < 1e-8);
        // sides transport: an interior point maps to the interior
        CHECK(signed_margin(image, apply(t, d.center())) > 0);
    }
}
