#pragma once

// Built-in reference fixtures: the three rank-1 groups, the rank-2 group,
// and the checks the library makes against their documented behaviour.

#include <string>
#include <vector>

#include "schottky/assembly.hpp"
#include "schottky/fixed_locus.hpp"
#include "schottky/realize.hpp"

namespace schottky {

struct ExampleRow {
    std::string fixture;
    std::string claim;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void row(std::vector<ExampleRow>& rows, const std::string& fixture,
                const std::string& claim, bool pass, std::string detail_msg = "") {
    rows.push_back({fixture, claim, pass, std::move(detail_msg)});
}

} // namespace detail

// Builds the embedded fixtures and re-checks their documented properties.
// Every row is expected to pass; failures carry details.
inline std::vector<ExampleRow> reproduce_examples(std::uint64_t seed = 0) {
    std::vector<ExampleRow> rows;
    using Tag = TransformClass::Tag;

    // K1: cyclic glide-reflection group, A(z) = 2 conj(z)
    {
        GroupAssembly k1 = free_product({make_basic({BasicKind::T1, 2.0, 0, {}}, 2)});
        const ExtendedMoebius& a = *k1.factors[0].inf_gen;
        detail::row(rows, "K1", "generator classifies as a glide-reflection",
                    classify(a).tag == Tag::GlideReflection);
        ExtendedMoebius a4 = power(a, 4);
        detail::row(rows, "K1", "fourth power is loxodromic",
                    classify(a4).tag == Tag::Loxodromic);
        bool cosets = true;
        for (int k = 1; k <= 3; ++k)
            for (int m = -2; m <= 2; ++m)
                cosets = cosets && identity_distance(compose(power(a, k), power(a4, -m))) > 1e-6;
        detail::row(rows, "K1", "cosets I, A, A^2, A^3 of the square-free subgroup are distinct",
                    cosets);
        Signature s1;
        s1.n = 2;
        s1.a1 = 1;
        detail::row(rows, "K1", "the action is free (empty fixed locus)",
                    locus_report(s1).empty());
        detail::row(rows, "K1", "rank 1", rank(s1) == 1);
        detail::row(rows, "K1", "ping-pong verification at depth 8",
                    verify_ping_pong(k1, 8).passed());
    }

    // K2: glide-reflection with a commuting involution, A = 2 conj(z), B = -z
    {
        GroupAssembly k2 = free_product({make_basic({BasicKind::T6, 2.0, 0, {}}, 2)});
        const ExtendedMoebius& a = *k2.factors[0].inf_gen;
        const ExtendedMoebius& b = *k2.factors[0].tors_gen;
        Signature s2;
        s2.n = 2;
        s2.a6 = 1;
        auto epi = find_epimorphism(s2);
        bool resid = epi && epi->residues.size() == 2 && epi->residues[0] == 1 &&
                     epi->residues[1] == 2;
        detail::row(rows, "K2", "quotient map sends the glide to 1 and the involution to 2",
                    resid);
        ExtendedMoebius ba2 = compose(b, power(a, 2)); // z -> -lambda^2 z
        detail::row(rows, "K2", "kernel witness B A^2 classifies as loxodromic",
                    classify(ba2).tag == Tag::Loxodromic);
        auto locus = locus_report(s2);
        detail::row(rows, "K2",
                    "fixed locus: one family of 2 loops fixed by the square of the action",
                    locus.size() == 1 && locus[0].shape == LocusComponent::Shape::Loop &&
                        locus[0].count == 2 && locus[0].fixed_by == 2);
        detail::row(rows, "K2", "rank 1", rank(s2) == 1);
        detail::row(rows, "K2", "ping-pong verification at depth 8",
                    verify_ping_pong(k2, 8).passed());
    }

    // K3: loxodromic with an axis-swapping pseudo-elliptic, A = 9z, B = i/conj(z)
    {
        GroupAssembly k3 = free_product({make_basic({BasicKind::T5, 9.0, 4, {}}, 2)});
        const ExtendedMoebius& a = *k3.factors[0].inf_gen;
        const ExtendedMoebius& b = *k3.factors[0].tors_gen;
        TransformClass cb = classify(b);
        detail::row(rows, "K3", "B classifies as pseudo-elliptic of order 4",
                    cb.tag == Tag::PseudoElliptic && cb.order && *cb.order == 4);
        ExtendedMoebius w = compose(compose(compose(inverse(b), a), b), a);
        double resid = identity_distance(w);
        detail::row(rows, "K3", "relation residual |B^-1 A B A - I| <= 1e-9", resid <= 1e-9,
                    "residual " + std::to_string(resid));
        ExtendedMoebius b2a = compose(power(b, 2), a); // the second kernel generator
        detail::row(rows, "K3", "both A and B^2 A classify as loxodromic",
                    classify(a).tag == Tag::Loxodromic &&
                        classify(b2a).tag == Tag::Loxodromic);
        Signature s3;
        s3.n = 2;
        s3.t5_orders = {4};
        detail::row(rows, "K3", "rank 1", rank(s3) == 1);
        detail::row(rows, "K3", "ping-pong verification at depth 8",
                    verify_ping_pong(k3, 8).passed());
    }

    // rank 2: signature (0,1,1,0,0,0), elliptic of order 2 + pseudo-elliptic
    // of order 4
    {
        ExtendedMoebius inv = make_map(0, -1, 1, 0, true); // z -> -1/conj(z)
        detail::row(rows, "rank2", "z -> -1/conj(z) classifies as an imaginary reflection",
                    classify(inv).tag == Tag::ImaginaryReflection);
        Signature s;
        s.n = 2;
        s.t2_orders = {2};
        s.t3_orders = {4};
        detail::row(rows, "rank2", "signature (0,1,1,0,0,0) is admissible",
                    is_admissible(s).admissible);
        detail::row(rows, "rank2", "rank 2", rank(s) == 2);
        detail::row(rows, "rank2",
                    "an order-2 involution cannot realize the order-4 pseudo-elliptic slot",
                    detect_finite_order(inv).value_or(0) == 2 && s.t3_orders == std::vector{4});
        GroupAssembly a = realize(s);
        detail::row(rows, "rank2", "realized assembly passes ping-pong at depth 8",
                    verify_ping_pong(a, 8).passed());
    }

    // classification invariance under random conformal conjugation
    {
        std::vector<ExtendedMoebius> fixtures = {
            make_map(Complex(0, 1), 0, 0, 1, false), make_map(1, 1, 0, 1, false),
            make_map(4, 0, 0, 1, false),             conjugation_map(),
            make_map(0, -1, 1, 0, true),             make_map(0, Complex(0, 1), 1, 0, true),
            make_map(2, 0, 0, 1, true),              make_map(1, 1, 0, 1, true)};
        Rng rng(seed);
        bool stable = true;
        for (int k = 0; k < 50 && stable; ++k) {
            ExtendedMoebius g = random_conformal(rng);
            ExtendedMoebius gi = inverse(g);
            for (const ExtendedMoebius& t : fixtures)
                stable = stable && classify(compose(compose(g, t), gi)).tag == classify(t).tag;
        }
        detail::row(rows, "classes", "tags survive 50 random conformal conjugations", stable);
    }
    return rows;
}

} // namespace schottky
