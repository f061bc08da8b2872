#include <catch2/catch_amalgamated.hpp>

#include "schottky/moebius.hpp"
#include "schottky/serial.hpp"

using namespace schottky;

namespace {

ExtendedMoebius glide(double lambda) { return make_map(lambda, 0, 0, 1, true); } // lambda conj(z)
ExtendedMoebius inversion_times(Complex mu) { return make_map(0, mu, 1, 0, true); } // mu / conj(z)

} // namespace

TEST_CASE("composition matches pointwise evaluation") {
    Rng rng(23);
    for (int k = 0; k < 200; ++k) {
        ExtendedMoebius s = random_conformal(rng);
        ExtendedMoebius t = random_conformal(rng);
        if (rng.uniform() < 0.5) s = compose(s, conjugation_map());
        if (rng.uniform() < 0.5) t = compose(conjugation_map(), t);
        ExtendedMoebius st = compose(s, t);
        SpherePoint z = SpherePoint::from(rng.complex_in_box(3.0));
        CHECK(chordal(apply(st, z), apply(s, apply(t, z))) < 1e-9);
    }
}

TEST_CASE("composition examples") {
    // J o J = id
    CHECK(is_identity(compose(conjugation_map(), conjugation_map())));

    // A(z) = 2 conj(z): A o A is z -> 4z
    ExtendedMoebius a2 = compose(glide(2.0), glide(2.0));
    CHECK(!a2.reversing);
    CHECK(same_map(a2, make_map(4, 0, 0, 1, false)));

    // B(z) = i/conj(z): B o B is z -> -z
    ExtendedMoebius b = inversion_times(Complex(0, 1));
    ExtendedMoebius b2 = compose(b, b);
    CHECK(!b2.reversing);
    CHECK(same_map(b2, make_map(-1, 0, 0, 1, false)));

    // orientation flags compose by parity
    CHECK(compose(glide(2.0), make_map(2, 0, 0, 1, false)).reversing);
    CHECK(!compose(glide(2.0), glide(3.0)).reversing);
}

TEST_CASE("associativity and inverses") {
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        auto pick = [&]() {
            ExtendedMoebius t = random_conformal(rng);
            return rng.uniform() < 0.5 ? compose(t, conjugation_map()) : t;
        };
        ExtendedMoebius x = pick(), y = pick(), z = pick();
        CHECK(same_map(compose(compose(x, y), z), compose(x, compose(y, z)), 1e-9));
        CHECK(is_identity(compose(x, inverse(x)), 1e-9));
        CHECK(is_identity(compose(inverse(x), x), 1e-9));
    }
}

TEST_CASE("classification of the nine classes") {
    auto tag = [](const ExtendedMoebius& t) { return classify(t).tag; };
    CHECK(tag(identity_map()) == TransformClass::Tag::Identity);
    CHECK(tag(make_map(Complex(0, 1), 0, 0, 1, false)) == TransformClass::Tag::Elliptic);
    CHECK(tag(make_map(1, 1, 0, 1, false)) == TransformClass::Tag::Parabolic);
    CHECK(tag(make_map(4, 0, 0, 1, false)) == TransformClass::Tag::Loxodromic);
    CHECK(tag(conjugation_map()) == TransformClass::Tag::Reflection);
    CHECK(tag(inversion_times(-1.0)) == TransformClass::Tag::ImaginaryReflection);
    CHECK(tag(inversion_times(Complex(0, 1))) == TransformClass::Tag::PseudoElliptic);
    CHECK(tag(glide(2.0)) == TransformClass::Tag::GlideReflection);
    CHECK(tag(make_map(1, 1, 0, 1, true)) == TransformClass::Tag::PseudoParabolic);
}

TEST_CASE("classification details") {
    // z -> iz rotates by pi/2: order 4
    TransformClass c = classify(make_map(Complex(0, 1), 0, 0, 1, false));
    CHECK(c.rotation_angle == Catch::Approx(M_PI / 2));
    REQUIRE(c.order.has_value());
    CHECK(*c.order == 4);

    // B(z) = i/conj(z) is pseudo-elliptic of order 4
    TransformClass pb = classify(inversion_times(Complex(0, 1)));
    REQUIRE(pb.order.has_value());
    CHECK(*pb.order == 4);

    // loxodromic multiplier modulus
    TransformClass lox = classify(make_map(4, 0, 0, 1, false));
    CHECK(lox.multiplier_modulus == Catch::Approx(4.0));

    // the reflection discriminator: M conj(M) = +-I detects fixed points
    Mat2 refl = conjugation_map().m;
    CHECK(dist(refl * refl.conjugated(), Mat2::identity()) < 1e-12);
    Mat2 imag = inversion_times(-1.0).m;
    CHECK((imag * imag.conjugated() + Mat2::identity()).frobenius() < 1e-12);
}

TEST_CASE("declared order is used and verified") {
    ExtendedMoebius e = elliptic_fixing(SpherePoint::from(Complex(-1, 0)),
                                        SpherePoint::from(Complex(1, 0)), 7);
    REQUIRE(e.declared_order.has_value());
    CHECK(*e.declared_order == 7);
    CHECK(is_identity(power(e, 7), 1e-9));
    TransformClass c = classify(e);
    CHECK(c.tag == TransformClass::Tag::Elliptic);
    REQUIRE(c.order.has_value());
    CHECK(*c.order == 7);
}

TEST_CASE("numerically ambiguous boundaries are reported") {
    // trace^2 within (eps, 8 eps] of the parabolic point
    double eps = kClassEps;
    Complex tr2 = 4.0 + 3.0 * eps;
    // build a matrix with this trace^2: diag(m, 1/m), m + 1/m = sqrt(tr2)
    Complex tr = std::sqrt(tr2);
    Complex m = 0.5 * (tr + std::sqrt(tr * tr - 4.0));
    CHECK_THROWS_AS(classify(make_map(m, 0, 0, 1.0 / m, false)), Error);
}

TEST_CASE("classification is conjugation invariant") {
    std::vector<ExtendedMoebius> fixtures = {
        make_map(Complex(0, 1), 0, 0, 1, false), make_map(1, 1, 0, 1, false),
        make_map(4, 0, 0, 1, false),             conjugation_map(),
        inversion_times(-1.0),                   inversion_times(Complex(0, 1)),
        glide(2.0),                              make_map(1, 1, 0, 1, true)};
    Rng rng(101);
    for (int k = 0; k < 50; ++k) {
        ExtendedMoebius g = random_conformal(rng);
        ExtendedMoebius gi = inverse(g);
        for (const ExtendedMoebius& t : fixtures) {
            ExtendedMoebius conj = compose(compose(g, t), gi);
            CHECK(classify(conj).tag == classify(t).tag);
        }
    }
}

TEST_CASE("square consistency for reversing maps") {
    Rng rng(77);
    auto square_tag = [](const ExtendedMoebius& t) { return classify(compose(t, t)).tag; };
    std::vector<ExtendedMoebius> reversing = {conjugation_map(), inversion_times(-1.0),
                                              inversion_times(Complex(0, 1)), glide(2.0),
                                              make_map(1, 1, 0, 1, true)};
    for (int k = 0; k < 40; ++k) {
        ExtendedMoebius g = random_conformal(rng);
        for (const ExtendedMoebius& t0 : reversing) {
            ExtendedMoebius t = compose(compose(g, t0), inverse(g));
            TransformClass::Tag tag = classify(t).tag;
            TransformClass::Tag sq = square_tag(t);
            bool involution = tag == TransformClass::Tag::Reflection ||
                              tag == TransformClass::Tag::ImaginaryReflection;
            CHECK(involution == (sq == TransformClass::Tag::Identity));
            if (tag == TransformClass::Tag::GlideReflection)
                CHECK(sq == TransformClass::Tag::Loxodromic);
            if (tag == TransformClass::Tag::PseudoElliptic)
                CHECK(sq == TransformClass::Tag::Elliptic);
            if (tag == TransformClass::Tag::PseudoParabolic)
                CHECK(sq == TransformClass::Tag::Parabolic);
        }
    }
}

TEST_CASE("fixed sets") {
    // z -> 4z fixes 0 and infinity
    FixedSet f = fixed_set(make_map(4, 0, 0, 1, false));
    REQUIRE(f.kind == FixedSet::Kind::PointPair);
    bool has_zero = chordal(f.p1, SpherePoint::from(0.0)) < 1e-9 ||
                    chordal(f.p2, SpherePoint::from(0.0)) < 1e-9;
    bool has_inf = chordal(f.p1, SpherePoint::infinity()) < 1e-9 ||
                   chordal(f.p2, SpherePoint::infinity()) < 1e-9;
    CHECK(has_zero);
    CHECK(has_inf);

    // J fixes the extended real axis
    FixedSet fj = fixed_set(conjugation_map());
    REQUIRE(fj.kind == FixedSet::Kind::Circle);
    Disc mirror = to_disc(fj.circle);
    for (double x : {-3.0, 0.0, 2.5})
        CHECK(std::abs(signed_margin(mirror, SpherePoint::from(Complex(x, 0)))) < 1e-9);
    CHECK(std::abs(signed_margin(mirror, SpherePoint::infinity())) < 1e-9);

    // B(z) = i/conj(z) has no fixed points
    CHECK(fixed_set(inversion_times(Complex(0, 1))).kind == FixedSet::Kind::Empty);

    // a glide-reflection fixes its axis endpoints on the sphere
    FixedSet fg = fixed_set(glide(2.0));
    CHECK(fg.kind == FixedSet::Kind::PointPair);

    // pseudo-parabolic z -> conj(z) + 1 fixes only infinity
    FixedSet fp = fixed_set(make_map(1, 1, 0, 1, true));
    REQUIRE(fp.kind == FixedSet::Kind::Point);
    CHECK(fp.p1.is_infinity());

    // reflection in the unit circle fixes it
    FixedSet fu = fixed_set(make_map(0, 1, 1, 0, true));
    REQUIRE(fu.kind == FixedSet::Kind::Circle);
    Disc unit_mirror = to_disc(fu.circle);
    CHECK(std::abs(signed_margin(unit_mirror, SpherePoint::from(Complex(1, 0)))) < 1e-9);
    CHECK(std::abs(signed_margin(unit_mirror, SpherePoint::from(Complex(0, -1)))) < 1e-9);

    CHECK_THROWS_AS(fixed_set(identity_map()), Error);
}

TEST_CASE("reflection discriminator agrees with fixed sets") {
    Rng rng(13);
    for (int k = 0; k < 60; ++k) {
        ExtendedMoebius g = random_conformal(rng);
        ExtendedMoebius gi = inverse(g);
        for (bool imaginary : {false, true}) {
            ExtendedMoebius base = imaginary ? inversion_times(-1.0) : conjugation_map();
            ExtendedMoebius t = compose(compose(g, base), gi);
            Mat2 q = t.m * t.m.conjugated();
            bool plus = dist(q, Mat2::identity()) < 1e-7;
            bool minus = (q + Mat2::identity()).frobenius() < 1e-7;
            CHECK(plus != minus);
            FixedSet f = fixed_set(t);
            CHECK((f.kind == FixedSet::Kind::Circle) == plus);
            CHECK((f.kind == FixedSet::Kind::Empty) == minus);
        }
    }
}

TEST_CASE("circle mapping examples") {
    Disc unit = disc_from_center_radius(0.0, 1.0, true);

    // J maps the unit circle to itself, same side
    CHECK(same_disc(apply(conjugation_map(), unit), unit, 1e-12));

    // z -> 2z maps the unit disc to the radius-2 disc
    Disc two = apply(make_map(2, 0, 0, 1, false), unit);
    CHECK(same_disc(two, disc_from_center_radius(0.0, 2.0, true), 1e-9));

    // z -> 1/z maps the right half plane Re z >= 1 onto |z - 1/2| <= 1/2.
    // Independent oracle: sample three boundary points, map them, refit.
    GeneralizedCircle line;
    line.A = 0;
    line.B = 1;
    line.C = -2;
    line.side = 1; // z + conj(z) - 2 >= 0, the half plane Re z >= 1
    Disc half = to_disc(normalized(line));
    CHECK(contains(half, SpherePoint::from(Complex(2, 0))));
    CHECK(!contains(half, SpherePoint::from(Complex(0, 0))));
    ExtendedMoebius inv = make_map(0, 1, 1, 0, false);
    Disc image = apply(inv, half);
    for (Complex z : {Complex(1, 0), Complex(1, 5), Complex(1, -3)}) {
        SpherePoint w = apply(inv, SpherePoint::from(z));
        CHECK(std::abs(signed_margin(image, w)) < 1e-9);
    }
    CHECK(same_disc(image, disc_from_center_radius(Complex(0.5, 0), 0.5, true), 1e-9));
}

TEST_CASE("evaluation handles infinity") {
    // A(z) = 2 conj(z) at i is -2i
    SpherePoint w = apply(glide(2.0), SpherePoint::from(Complex(0, 1)));
    CHECK(chordal(w, SpherePoint::from(Complex(0, -2))) < 1e-12);

    // (az+b)/(cz+d) at infinity is a/c
    ExtendedMoebius t = make_map(3, 1, 2, 1, false);
    SpherePoint at_inf = apply(t, SpherePoint::infinity());
    CHECK(chordal(at_inf, SpherePoint::from(Complex(1.5, 0))) < 1e-12);

    // pole maps to infinity
    SpherePoint pole = apply(t, SpherePoint::from(Complex(-0.5, 0)));
    CHECK(pole.is_infinity(1e-12));

    // B(z) = i/conj(z) at 1 is i
    CHECK(chordal(apply(inversion_times(Complex(0, 1)), SpherePoint::from(1.0)),
                  SpherePoint::from(Complex(0, 1))) < 1e-12);
}

TEST_CASE("textual serialization round trips") {
    std::vector<ExtendedMoebius> fixtures = {
        identity_map(),      conjugation_map(),     glide(2.0),
        inversion_times(-1), inversion_times(Complex(0, 1)),
        make_map(Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(1, 1), false)};
    for (const ExtendedMoebius& t : fixtures) {
        ExtendedMoebius back = parse_transform(format_transform(t));
        CHECK(back.reversing == t.reversing);
        CHECK(same_map(back, t, 1e-9));
    }
    // the documented input format
    ExtendedMoebius g = parse_transform("[2, 0; 0, 1] -");
    CHECK(classify(g).tag == TransformClass::Tag::GlideReflection);
    ExtendedMoebius b = parse_transform("[0, i; 1, 0] -");
    CHECK(classify(b).tag == TransformClass::Tag::PseudoElliptic);
    CHECK_THROWS_AS(parse_transform("[1, 0; 0, 1]"), IoError);
    CHECK_THROWS_AS(parse_transform("nonsense"), IoError);
}
