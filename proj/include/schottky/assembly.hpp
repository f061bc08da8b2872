#pragma once

// Constructors for the basic groups T0..T8 and the free-product / HNN
// assembler, with a numerical ping-pong certificate.
//
// Every factor owns a host disc. The certificate checked per factor is:
//   (i)  the paired discs of the infinite generator lie strictly inside
//        the host and are disjoint;
//   (ii) the generator maps the boundary of the source disc onto the
//        boundary of the target disc, exterior onto interior;
//   (iii) every nontrivial torsion element maps the complement of the
//        host strictly inside it, missing both paired discs.
// Together with pairwise-disjoint hosts this makes every nontrivial
// element of a factor map the outside of its host into the host, which is
// the combination hypothesis for iterated free products. T8 factors carry
// a reflection plus a recursively verified sub-assembly on an invariant
// circle; HNN pairs behave like an extra infinite generator whose discs
// live in the common exterior.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "schottky/disc.hpp"
#include "schottky/errors.hpp"
#include "schottky/moebius.hpp"
#include "schottky/signatures.hpp"

namespace schottky {

struct PairedDiscs {
    Disc d1, d2; // generator maps exterior of d1 onto interior of d2
};

struct BasicGroup {
    BasicKind kind = BasicKind::T0;
    int n = 1;
    double lambda = 0; // dilation parameter, when applicable
    int order = 0;     // full torsion order, when applicable

    std::optional<ExtendedMoebius> inf_gen; // loxodromic or glide-reflection
    std::optional<PairedDiscs> pairing;
    std::optional<ExtendedMoebius> tors_gen; // elliptic / pseudo-elliptic / reflection
    int tors_order = 0;

    Disc host{{0, 0, -1}, 0};
    std::shared_ptr<const std::vector<BasicGroup>> sub; // T8: the factors of F
};

struct GroupAssembly {
    int n = 1;
    std::vector<BasicGroup> factors;
    struct HnnPairing {
        Disc d1, d2;
        ExtendedMoebius t;
    };
    std::vector<HnnPairing> hnn;
};

// Flattened generator list with provenance; index -1 marks HNN generators.
struct GeneratorRef {
    int factor = 0;
    std::string role; // "infinite", "torsion", "reflection", "hnn", ...
    ExtendedMoebius g;
};

inline std::vector<GeneratorRef> assembly_generators(const GroupAssembly& a) {
    std::vector<GeneratorRef> out;
    for (size_t i = 0; i < a.factors.size(); ++i) {
        const BasicGroup& f = a.factors[i];
        int idx = static_cast<int>(i);
        if (f.inf_gen) out.push_back({idx, "infinite", *f.inf_gen});
        if (f.tors_gen) out.push_back({idx, f.sub ? "reflection" : "torsion", *f.tors_gen});
        if (f.sub)
            for (const BasicGroup& sub : *f.sub) {
                if (sub.inf_gen) out.push_back({idx, "circle-group infinite", *sub.inf_gen});
                if (sub.tors_gen) out.push_back({idx, "circle-group torsion", *sub.tors_gen});
            }
    }
    for (const GroupAssembly::HnnPairing& h : a.hnn) out.push_back({-1, "hnn", h.t});
    return out;
}

struct Finding {
    std::string code;
    std::string detail;
};

struct VerificationReport {
    std::vector<Finding> findings;
    bool passed() const { return findings.empty(); }
};

struct VerifyOptions {
    double sep_margin = kSepMargin; // strict separation, radians
    double geom_eps = 1e-7;         // circle-image sample tolerance, radians
    double rel_eps = 1e-7;          // algebraic relation residual (placed factors)
    double id_eps = kIdentityEps;   // word nontriviality threshold
    long word_cap = 10'000'000;     // projected word-count cap
};

// ---------------------------------------------------------------------
// synthesis
// ---------------------------------------------------------------------

struct BasicParams {
    BasicKind kind = BasicKind::T0;
    double lambda = 0; // 0 = kind default
    int order = 0;     // T2: order; T3/T5: full order; T4: elliptic order
    T8Sub f;           // T8 only
};

namespace detail {

inline void conjugate_in_place(BasicGroup& g, const ExtendedMoebius& m) {
    ExtendedMoebius mi = inverse(m);
    auto conj_map = [&](ExtendedMoebius& t) {
        auto order = t.declared_order;
        t = compose(compose(m, t), mi);
        t.declared_order = order;
    };
    if (g.inf_gen) conj_map(*g.inf_gen);
    if (g.tors_gen) conj_map(*g.tors_gen);
    if (g.pairing) {
        g.pairing->d1 = apply(m, g.pairing->d1);
        g.pairing->d2 = apply(m, g.pairing->d2);
    }
    g.host = apply(m, g.host);
    if (g.sub) {
        auto subs = std::make_shared<std::vector<BasicGroup>>(*g.sub);
        for (BasicGroup& f : *subs) conjugate_in_place(f, m);
        g.sub = std::move(subs);
    }
}

inline bool factor_certificate(const BasicGroup& g, const VerifyOptions& opt,
                               const std::string& label, std::vector<Finding>* out);

// Windowed standard synthesis: the host is the complement of a small
// "window" ball on the real axis; everything else in an assembly lives in
// the window's image. The window radius shrinks until the certificate
// holds.
inline Disc shrink_window_until_valid(BasicGroup& g, Complex window_center, double rho0) {
    VerifyOptions opt;
    for (int step = 0; step < 50; ++step) {
        double rho = rho0 * std::pow(0.5, step);
        g.host = disc_from_center_radius(window_center, rho, false); // outside = host
        if (factor_certificate(g, opt, "synthesis", nullptr)) return g.host;
    }
    fail("RelationFailure", "could not realize the factor geometry at any window size");
}

inline double default_lambda(BasicKind kind) {
    switch (kind) {
        case BasicKind::T1:
        case BasicKind::T6: return 2.0;
        default: return 9.0;
    }
}

inline void check_t0_like_lambda(double lambda) {
    if (!(lambda > 1.0 + 1e-9))
        fail("InvalidParameter", "dilation parameter must be a real number greater than 1");
}

inline PairedDiscs symmetric_axis_discs(double modulus) {
    double s = std::sqrt(modulus);
    return {disc_from_center_radius(0.0, 1.0 / s, true), disc_from_center_radius(0.0, s, false)};
}

// T8 helper: sub-factors of F on the real axis, commuting with J.
inline BasicGroup make_real_sub_factor(bool loxodromic, int order, int n, double lambda) {
    BasicGroup g;
    g.n = n;
    if (loxodromic) {
        g.kind = BasicKind::T0;
        g.lambda = lambda;
        g.inf_gen = scaling_map(lambda);
        g.pairing = symmetric_axis_discs(lambda);
        g.host = shrink_window_until_valid(g, 1.0, 0.25);
        return g;
    }
    g.kind = BasicKind::T2;
    g.order = order;
    g.tors_gen = elliptic_fixing(SpherePoint::from(Complex(0, 1)),
                                 SpherePoint::from(Complex(0, -1)), order);
    g.tors_order = order;
    g.host = shrink_window_until_valid(g, 4.0, 0.8);
    return g;
}

inline BasicGroup make_basic_standard(const BasicParams& p, int n) {
    if (n < 1) fail("InvalidOrder", "n must be a positive integer");
    BasicGroup g;
    g.kind = p.kind;
    g.n = n;
    double lambda = p.lambda != 0 ? p.lambda : default_lambda(p.kind);
    switch (p.kind) {
        case BasicKind::T0: {
            check_t0_like_lambda(lambda);
            g.lambda = lambda;
            g.inf_gen = scaling_map(lambda);
            g.pairing = symmetric_axis_discs(lambda);
            g.host = shrink_window_until_valid(g, 1.0, 0.25);
            return g;
        }
        case BasicKind::T1: {
            check_t0_like_lambda(lambda);
            g.lambda = lambda;
            g.inf_gen = make_map(lambda, 0, 0, 1, true); // z -> lambda conj(z)
            g.pairing = symmetric_axis_discs(lambda);
            g.host = shrink_window_until_valid(g, 1.0, 0.25);
            return g;
        }
        case BasicKind::T2: {
            if (p.order < 2 || n % p.order != 0)
                fail("InvalidOrder", "elliptic order must divide n and be at least 2");
            g.order = g.tors_order = p.order;
            g.tors_gen = elliptic_fixing(SpherePoint::from(Complex(-1, 0)),
                                         SpherePoint::from(Complex(1, 0)), p.order);
            g.host = shrink_window_until_valid(g, 4.0, 0.8);
            return g;
        }
        case BasicKind::T3: {
            int m = p.order;
            if (m < 2 || (2 * n) % m != 0 || n % m == 0)
                fail("InvalidOrder", "pseudo-elliptic order must divide 2n but not n");
            int d = m / 2;
            g.order = g.tors_order = m;
            g.tors_gen = make_map(0, std::polar(1.0, M_PI / d), 1, 0, true, m);
            g.host = shrink_window_until_valid(g, 2.0, 0.5);
            return g;
        }
        case BasicKind::T4: {
            if (p.order < 2 || n % p.order != 0)
                fail("InvalidOrder", "T4 elliptic order must divide n and be at least 2");
            check_t0_like_lambda(lambda);
            g.lambda = lambda;
            g.order = g.tors_order = p.order;
            g.inf_gen = scaling_map(lambda);
            g.tors_gen = elliptic_fixing(SpherePoint::from(Complex(0, 0)),
                                         SpherePoint::infinity(), p.order);
            g.pairing = symmetric_axis_discs(lambda);
            g.host = shrink_window_until_valid(g, 1.0, 0.25);
            return g;
        }
        case BasicKind::T5: {
            int m = p.order;
            if (m < 2 || (2 * n) % m != 0 || n % m == 0)
                fail("InvalidOrder", "pseudo-elliptic order must divide 2n but not n");
            check_t0_like_lambda(lambda);
            int d = m / 2;
            g.lambda = lambda;
            g.order = g.tors_order = m;
            g.inf_gen = scaling_map(lambda);
            g.tors_gen = make_map(0, std::polar(1.0, M_PI / d), 1, 0, true, m);
            double r = 1.0 / std::sqrt(lambda); // tors_gen swaps the paired discs
            g.pairing = {disc_from_center_radius(0.0, r, true),
                         disc_from_center_radius(0.0, lambda * r, false)};
            g.host = shrink_window_until_valid(g, std::pow(lambda, 0.25), 0.4);
            return g;
        }
        case BasicKind::T6: {
            if (n % 2 != 0) fail("ParityViolation", "T6 factors require even n");
            check_t0_like_lambda(lambda);
            g.lambda = lambda;
            g.order = g.tors_order = 2;
            g.inf_gen = make_map(lambda, 0, 0, 1, true);
            g.tors_gen = elliptic_fixing(SpherePoint::from(Complex(0, 0)),
                                         SpherePoint::infinity(), 2);
            g.pairing = symmetric_axis_discs(lambda);
            g.host = shrink_window_until_valid(g, 1.0, 0.25);
            return g;
        }
        case BasicKind::T7: {
            if (n % 2 == 0) fail("ParityViolation", "T7 factors require odd n");
            g.order = g.tors_order = 2;
            g.tors_gen = make_map(0, 1, 1, 0, true, 2); // reflection in the unit circle
            g.host = shrink_window_until_valid(g, 3.0, 0.6);
            return g;
        }
        case BasicKind::T8: {
            if (n % 2 == 0) fail("ParityViolation", "T8 factors require odd n");
            for (int l : p.f.elliptic_orders)
                if (l < 2 || n % l != 0)
                    fail("InvalidOrder", "T8 elliptic order must divide n and be at least 2");
            if (p.f.lox_count < 0) fail("InvalidOrder", "negative loxodromic count");
            g.order = g.tors_order = 2;
            g.tors_gen = conjugation_map(); // reflection in the real axis
            auto subs = std::make_shared<std::vector<BasicGroup>>();
            std::vector<int> orders = p.f.elliptic_orders;
            std::sort(orders.begin(), orders.end());
            int j = 0;
            auto place_sub = [&](BasicGroup sub_std) {
                Disc target = disc_from_center_radius(6.0 * j, 2.0, true);
                conjugate_in_place(sub_std, disc_map(sub_std.host, target));
                subs->push_back(std::move(sub_std));
                ++j;
            };
            for (int l : orders) place_sub(make_real_sub_factor(false, l, n, 0));
            for (int k = 0; k < p.f.lox_count; ++k)
                place_sub(make_real_sub_factor(true, 0, n, 9.0));
            g.sub = subs;
            double span = 6.0 * std::max(1, j) + 6.0;
            VerifyOptions opt;
            for (int grow = 0; grow < 20; ++grow) {
                g.host = disc_from_center_radius(Complex(0, span), 1.0, false);
                if (factor_certificate(g, opt, "synthesis", nullptr)) return g;
                span *= 2;
            }
            fail("RelationFailure", "could not realize the T8 factor geometry");
        }
    }
    fail("InvalidParameter", "unknown factor kind");
}

} // namespace detail

// Build a basic group. With no placement the factor sits in its standard
// position (fixed points on the axis 0/infinity or at canonical anchors);
// with a placement disc the whole configuration is conjugated into it.
inline BasicGroup make_basic(const BasicParams& p, int n,
                             std::optional<Disc> placement = std::nullopt) {
    BasicGroup g = detail::make_basic_standard(p, n);
    if (placement) detail::conjugate_in_place(g, disc_map(g.host, *placement));
    return g;
}

// ---------------------------------------------------------------------
// assembler
// ---------------------------------------------------------------------

inline GroupAssembly free_product(std::vector<BasicGroup> factors,
                                  double sep_margin = kSepMargin) {
    if (factors.empty()) fail("EmptyFactorList", "a free product needs at least one factor");
    GroupAssembly a;
    a.n = factors.front().n;
    for (const BasicGroup& f : factors)
        if (f.n != a.n) fail("InvalidOrder", "factors disagree on the ambient n");
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            double sep = separation(factors[i].host, factors[j].host);
            if (sep <= sep_margin)
                fail("HostOverlap", "hosts of factors " + std::to_string(i) + " and " +
                                        std::to_string(j) + " separated by only " +
                                        std::to_string(sep));
        }
    a.factors = std::move(factors);
    return a;
}

inline GroupAssembly hnn_extend(GroupAssembly base, const Disc& d1, const Disc& d2,
                                const ExtendedMoebius& t, double sep_margin = kSepMargin) {
    TransformClass c = classify(t);
    if (c.tag != TransformClass::Tag::Loxodromic && c.tag != TransformClass::Tag::GlideReflection)
        fail("WrongTransformClass",
             std::string("pairing transformation must be loxodromic or a glide-reflection, got ") +
                 to_string(c.tag));
    if (!disjoint(d1, d2, sep_margin))
        fail("PairingGeometryFailure", "the paired discs are not disjoint");
    auto check_clear = [&](const Disc& d, const std::string& which) {
        for (size_t i = 0; i < base.factors.size(); ++i)
            if (!disjoint(d, base.factors[i].host, sep_margin))
                fail("PairingGeometryFailure",
                     which + " pairing disc meets the host of factor " + std::to_string(i));
        for (size_t i = 0; i < base.hnn.size(); ++i)
            if (!disjoint(d, base.hnn[i].d1, sep_margin) || !disjoint(d, base.hnn[i].d2, sep_margin))
                fail("PairingGeometryFailure",
                     which + " pairing disc meets the discs of pairing " + std::to_string(i));
    };
    check_clear(d1, "first");
    check_clear(d2, "second");
    Disc image = apply(t, d1);
    if (!same_circle(image, d2, 1e-7))
        fail("PairingGeometryFailure",
             "the transformation does not carry the first circle onto the second");
    if (!same_disc(image, d2.complement(), 1e-7))
        fail("PairingGeometryFailure",
             "the transformation maps the first disc over the second; reverse a side");
    base.hnn.push_back({d1, d2, t});
    return base;
}

// ---------------------------------------------------------------------
// per-factor certificate
// ---------------------------------------------------------------------

namespace detail {

inline void report(std::vector<Finding>* out, bool* ok, const std::string& code,
                   const std::string& detail_msg) {
    *ok = false;
    if (out) out->push_back({code, detail_msg});
}

inline bool check_pairing(const ExtendedMoebius& t, const PairedDiscs& p, const Disc& host,
                          const VerifyOptions& opt, const std::string& label,
                          std::vector<Finding>* out, bool require_host) {
    bool ok = true;
    if (require_host) {
        if (!contained_in(p.d1, host, opt.sep_margin) || !contained_in(p.d2, host, opt.sep_margin))
            report(out, &ok, "PairingGeometryFailure",
                   label + ": paired discs do not lie strictly inside the host");
    }
    if (!disjoint(p.d1, p.d2, opt.sep_margin))
        report(out, &ok, "PairingGeometryFailure", label + ": paired discs are not disjoint");
    Disc image = apply(t, p.d1);
    if (!same_disc(image, p.d2.complement(), opt.geom_eps))
        report(out, &ok, "PairingGeometryFailure",
               label + ": generator does not map the exterior of the source disc onto the "
                       "interior of the target disc");
    for (const SpherePoint& q : boundary_points(p.d1, 16)) {
        double margin = signed_margin(p.d2, apply(t, q));
        if (std::abs(margin) > opt.geom_eps) {
            report(out, &ok, "PairingGeometryFailure",
                   label + ": sampled boundary point misses the target circle by " +
                       std::to_string(margin));
            break;
        }
    }
    return ok;
}

inline bool check_fixed_geometry(const ExtendedMoebius& t, const Disc& host,
                                 const VerifyOptions& opt, const std::string& label,
                                 std::vector<Finding>* out) {
    bool ok = true;
    FixedSet f = fixed_set(t);
    auto inside = [&](const SpherePoint& p) {
        if (!contains(host, p, -1e-12) || signed_margin(host, p) < opt.sep_margin)
            report(out, &ok, "PairingGeometryFailure",
                   label + ": fixed-point geometry escapes the host disc");
    };
    switch (f.kind) {
        case FixedSet::Kind::Point: inside(f.p1); break;
        case FixedSet::Kind::PointPair:
            inside(f.p1);
            inside(f.p2);
            break;
        case FixedSet::Kind::Circle: {
            for (const SpherePoint& q : boundary_points(to_disc(f.circle), 8)) inside(q);
            break;
        }
        case FixedSet::Kind::Empty: break;
    }
    return ok;
}

inline bool factor_certificate(const BasicGroup& g, const VerifyOptions& opt,
                               const std::string& label, std::vector<Finding>* out) {
    bool ok = true;
    const Disc window = g.host.complement();

    if (g.inf_gen) {
        if (!g.pairing) {
            report(out, &ok, "PairingGeometryFailure", label + ": missing paired discs");
            return ok;
        }
        if (!check_pairing(*g.inf_gen, *g.pairing, g.host, opt, label, out, true)) ok = false;
        if (!check_fixed_geometry(*g.inf_gen, g.host, opt, label, out)) ok = false;
    }

    if (g.tors_gen) {
        // declared order, exactly
        if (g.tors_order < 2) {
            report(out, &ok, "RelationFailure", label + ": torsion order must be at least 2");
            return ok;
        }
        if (identity_distance(power(*g.tors_gen, g.tors_order)) > opt.rel_eps * 10)
            report(out, &ok, "RelationFailure",
                   label + ": torsion generator misses its declared order");
        for (int k = 1; k < g.tors_order; ++k) {
            ExtendedMoebius theta = power(*g.tors_gen, k);
            if (identity_distance(theta) <= opt.id_eps)
                report(out, &ok, "RelationFailure",
                       label + ": torsion generator has a smaller order than declared");
            Disc img = apply(theta, window);
            if (!contained_in(img, g.host, opt.sep_margin))
                report(out, &ok, "PingPongFailure",
                       label + ": torsion power " + std::to_string(k) +
                           " does not pull the host complement inside the host");
            if (g.pairing &&
                (!disjoint(img, g.pairing->d1, opt.sep_margin) ||
                 !disjoint(img, g.pairing->d2, opt.sep_margin)))
                report(out, &ok, "PingPongFailure",
                       label + ": torsion power " + std::to_string(k) +
                           " hits a paired disc");
        }
        if (!g.sub && !check_fixed_geometry(*g.tors_gen, g.host, opt, label, out)) ok = false;
    }

    // declared relations
    if ((g.kind == BasicKind::T4 || g.kind == BasicKind::T6) && g.inf_gen && g.tors_gen) {
        if (!same_map(compose(*g.inf_gen, *g.tors_gen), compose(*g.tors_gen, *g.inf_gen),
                      opt.rel_eps))
            report(out, &ok, "RelationFailure", label + ": generators fail to commute");
    }
    if (g.kind == BasicKind::T5 && g.inf_gen && g.tors_gen) {
        ExtendedMoebius w = compose(
            compose(compose(inverse(*g.tors_gen), *g.inf_gen), *g.tors_gen), *g.inf_gen);
        if (identity_distance(w) > opt.rel_eps)
            report(out, &ok, "RelationFailure",
                   label + ": pseudo-elliptic does not invert the loxodromic axis");
    }

    if (g.sub) {
        const ExtendedMoebius& sigma = *g.tors_gen;
        Disc sigma_img = apply(sigma, window);
        // mirror circle inside the host
        FixedSet mirror = fixed_set(sigma);
        if (mirror.kind != FixedSet::Kind::Circle)
            report(out, &ok, "RelationFailure", label + ": T8 generator is not a reflection");
        else
            for (const SpherePoint& q : boundary_points(to_disc(mirror.circle), 8))
                if (signed_margin(g.host, q) < opt.sep_margin)
                    report(out, &ok, "PairingGeometryFailure",
                           label + ": invariant circle escapes the host");
        for (size_t a = 0; a < g.sub->size(); ++a) {
            const BasicGroup& f = (*g.sub)[a];
            std::string sub_label = label + ".F" + std::to_string(a);
            if (!contained_in(f.host, g.host, opt.sep_margin))
                report(out, &ok, "HostOverlap", sub_label + ": sub-host escapes the host");
            for (size_t b = a + 1; b < g.sub->size(); ++b)
                if (!disjoint(f.host, (*g.sub)[b].host, opt.sep_margin))
                    report(out, &ok, "HostOverlap",
                           sub_label + ": sub-hosts " + std::to_string(a) + "," +
                               std::to_string(b) + " overlap");
            if (!disjoint(sigma_img, f.host, opt.sep_margin))
                report(out, &ok, "PingPongFailure",
                       sub_label + ": reflected window hits a sub-host");
            if (!contained_in(apply(sigma, f.host), g.host, opt.sep_margin))
                report(out, &ok, "PingPongFailure",
                       sub_label + ": reflected sub-host escapes the host");
            auto check_commutes = [&](const ExtendedMoebius& gen) {
                if (!same_map(compose(sigma, gen), compose(gen, sigma), opt.rel_eps * 100))
                    report(out, &ok, "RelationFailure",
                           sub_label + ": sub-generator does not commute with the reflection");
            };
            if (f.inf_gen) check_commutes(*f.inf_gen);
            if (f.tors_gen) check_commutes(*f.tors_gen);
            if (!factor_certificate(f, opt, sub_label, out)) ok = false;
        }
        if (!contained_in(sigma_img, g.host, opt.sep_margin))
            report(out, &ok, "PingPongFailure",
                   label + ": reflection does not pull the host complement inside the host");
    }
    return ok;
}

} // namespace detail

// ---------------------------------------------------------------------
// reduced words
// ---------------------------------------------------------------------

namespace detail {

struct Letter {
    int player = 0;      // factor index, or factor_count + hnn index
    int sub_player = -1; // T8 internals
    enum class Role { InfPos, InfNeg, Torsion, Sigma, SubInfPos, SubInfNeg, SubTorsion } role;
    ExtendedMoebius g;
    Disc target;
    std::string name;
};

struct WalkState {
    int player = -1;
    int phase = 0; // 0 none, 1 run+, 2 run-, 3 torsion-done, 4 inside T8 visit
    int sub_player = -1;
    int sub_phase = 0;

    friend bool operator<(const WalkState& a, const WalkState& b) {
        return std::tie(a.player, a.phase, a.sub_player, a.sub_phase) <
               std::tie(b.player, b.phase, b.sub_player, b.sub_phase);
    }
};

inline std::vector<Letter> letter_table(const GroupAssembly& a) {
    std::vector<Letter> letters;
    auto add_inf = [&](int player, int sub, const ExtendedMoebius& t, const PairedDiscs& p,
                       const std::string& base, bool is_sub) {
        Letter pos{player, sub,
                   is_sub ? Letter::Role::SubInfPos : Letter::Role::InfPos,
                   t, p.d2, base};
        Letter neg{player, sub,
                   is_sub ? Letter::Role::SubInfNeg : Letter::Role::InfNeg,
                   inverse(t), p.d1, base + "'"};
        letters.push_back(std::move(pos));
        letters.push_back(std::move(neg));
    };
    auto add_torsion = [&](int player, int sub, const ExtendedMoebius& t, int order,
                           const Disc& host, const std::string& base, bool is_sub) {
        for (int k = 1; k < order; ++k) {
            Letter l{player, sub, is_sub ? Letter::Role::SubTorsion : Letter::Role::Torsion,
                     power(t, k), apply(power(t, k), host.complement()),
                     k == 1 ? base : base + "^" + std::to_string(k)};
            letters.push_back(std::move(l));
        }
    };
    for (size_t i = 0; i < a.factors.size(); ++i) {
        const BasicGroup& f = a.factors[i];
        std::string tag = std::to_string(i);
        if (f.sub) {
            letters.push_back({static_cast<int>(i), -1, Letter::Role::Sigma, *f.tors_gen,
                               f.host, "s" + tag});
            for (size_t j = 0; j < f.sub->size(); ++j) {
                const BasicGroup& sub = (*f.sub)[j];
                std::string sub_tag = tag + "." + std::to_string(j);
                if (sub.inf_gen)
                    add_inf(static_cast<int>(i), static_cast<int>(j), *sub.inf_gen,
                            *sub.pairing, "f" + sub_tag, true);
                if (sub.tors_gen)
                    add_torsion(static_cast<int>(i), static_cast<int>(j), *sub.tors_gen,
                                sub.tors_order, sub.host, "e" + sub_tag, true);
            }
            continue;
        }
        if (f.inf_gen) add_inf(static_cast<int>(i), -1, *f.inf_gen, *f.pairing, "a" + tag, false);
        if (f.tors_gen) add_torsion(static_cast<int>(i), -1, *f.tors_gen, f.tors_order, f.host,
                                    "e" + tag, false);
    }
    for (size_t j = 0; j < a.hnn.size(); ++j) {
        int player = static_cast<int>(a.factors.size() + j);
        std::string base = "t" + std::to_string(j);
        PairedDiscs p{a.hnn[j].d1, a.hnn[j].d2};
        add_inf(player, -1, a.hnn[j].t, p, base, false);
    }
    return letters;
}

inline bool may_follow(const WalkState& s, const Letter& l, WalkState& next) {
    next = s;
    auto open_visit = [&]() {
        next.player = l.player;
        next.sub_player = -1;
        next.sub_phase = 0;
        switch (l.role) {
            case Letter::Role::InfPos: next.phase = 1; break;
            case Letter::Role::InfNeg: next.phase = 2; break;
            case Letter::Role::Torsion: next.phase = 3; break;
            case Letter::Role::Sigma: next.phase = 4; break;
            case Letter::Role::SubInfPos:
                next.phase = 4;
                next.sub_player = l.sub_player;
                next.sub_phase = 1;
                break;
            case Letter::Role::SubInfNeg:
                next.phase = 4;
                next.sub_player = l.sub_player;
                next.sub_phase = 2;
                break;
            case Letter::Role::SubTorsion:
                next.phase = 4;
                next.sub_player = l.sub_player;
                next.sub_phase = 3;
                break;
        }
        return true;
    };
    if (s.player != l.player) return open_visit();
    switch (l.role) {
        case Letter::Role::InfPos: return s.phase == 1 ? true : false;
        case Letter::Role::InfNeg: return s.phase == 2 ? true : false;
        case Letter::Role::Torsion:
            if (s.phase == 1 || s.phase == 2) {
                next.phase = 3;
                return true;
            }
            return false;
        case Letter::Role::Sigma: return false; // the reflection opens a visit
        case Letter::Role::SubInfPos:
        case Letter::Role::SubInfNeg:
        case Letter::Role::SubTorsion: {
            if (s.phase != 4) return false;
            bool fresh_sub = s.sub_player != l.sub_player;
            if (!fresh_sub) {
                if (l.role == Letter::Role::SubInfPos && s.sub_phase == 1) return true;
                if (l.role == Letter::Role::SubInfNeg && s.sub_phase == 2) return true;
                return false;
            }
            next.sub_player = l.sub_player;
            next.sub_phase = l.role == Letter::Role::SubInfPos   ? 1
                             : l.role == Letter::Role::SubInfNeg ? 2
                                                                 : 3;
            return true;
        }
    }
    return false;
}

inline long count_reduced_words(const std::vector<Letter>& letters, int depth, long cap) {
    std::map<std::pair<WalkState, int>, long> memo;
    std::function<long(const WalkState&, int)> go = [&](const WalkState& s, int left) -> long {
        if (left == 0) return 0;
        auto key = std::make_pair(s, left);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long total = 0;
        for (const Letter& l : letters) {
            WalkState next;
            if (!may_follow(s, l, next)) continue;
            total += 1 + go(next, left - 1);
            if (total > cap) break;
        }
        memo[key] = total;
        return total;
    };
    return go(WalkState{}, depth);
}

} // namespace detail

struct Word {
    std::string name;
    ExtendedMoebius value;
    int length = 0;
};

// Visits each reduced word of length <= depth exactly once; finite-order
// generators contribute all nontrivial powers as single letters, infinite
// generators contribute sign runs. Throws DepthExplosion when the
// projected number of words exceeds the cap.
inline void for_each_reduced_word(const GroupAssembly& a, int depth,
                                  const std::function<void(const Word&)>& fn,
                                  long cap = 10'000'000) {
    if (depth < 0) fail("OutOfRange", "depth must be nonnegative");
    std::vector<detail::Letter> letters = detail::letter_table(a);
    if (letters.empty() || depth == 0) return;
    long projected = detail::count_reduced_words(letters, depth, cap);
    if (projected > cap)
        fail("DepthExplosion", "projected word count exceeds the cap of " + std::to_string(cap));
    Word w;
    std::function<void(const detail::WalkState&, const ExtendedMoebius&, int)> go =
        [&](const detail::WalkState& s, const ExtendedMoebius& prefix, int left) {
            if (left == 0) return;
            for (const detail::Letter& l : letters) {
                detail::WalkState next;
                if (!detail::may_follow(s, l, next)) continue;
                std::string saved = w.name;
                w.name = saved.empty() ? l.name : saved + "." + l.name;
                w.length += 1;
                w.value = compose(prefix, l.g);
                fn(w);
                go(next, w.value, left - 1);
                w.name = saved;
                w.length -= 1;
            }
        };
    go(detail::WalkState{}, identity_map(), depth);
}

inline std::vector<Word> enumerate_reduced_words(const GroupAssembly& a, int depth,
                                                 long cap = 10'000'000) {
    std::vector<Word> out;
    for_each_reduced_word(a, depth, [&](const Word& w) { out.push_back(w); }, cap);
    return out;
}

// ---------------------------------------------------------------------
// verification and limit sets
// ---------------------------------------------------------------------

inline VerificationReport verify_ping_pong(const GroupAssembly& a, int max_depth,
                                           const VerifyOptions& opt = {}) {
    VerificationReport rep;
    bool ok = true;
    for (size_t i = 0; i < a.factors.size(); ++i)
        for (size_t j = i + 1; j < a.factors.size(); ++j) {
            double sep = separation(a.factors[i].host, a.factors[j].host);
            if (sep <= opt.sep_margin)
                detail::report(&rep.findings, &ok, "HostOverlap",
                               "hosts " + std::to_string(i) + "," + std::to_string(j) +
                                   " separated by only " + std::to_string(sep));
        }
    for (size_t i = 0; i < a.factors.size(); ++i)
        detail::factor_certificate(a.factors[i], opt, "factor " + std::to_string(i),
                                   &rep.findings);
    for (size_t j = 0; j < a.hnn.size(); ++j) {
        const GroupAssembly::HnnPairing& h = a.hnn[j];
        std::string label = "pairing " + std::to_string(j);
        TransformClass c;
        bool classified = true;
        try {
            c = classify(h.t);
        } catch (const Error& e) {
            detail::report(&rep.findings, &ok, e.code(), label + ": " + e.what());
            classified = false;
        }
        if (classified && c.tag != TransformClass::Tag::Loxodromic &&
            c.tag != TransformClass::Tag::GlideReflection)
            detail::report(&rep.findings, &ok, "WrongTransformClass",
                           label + ": pairing transformation is " + to_string(c.tag));
        detail::check_pairing(h.t, {h.d1, h.d2}, Disc{}, opt, label, &rep.findings, false);
        auto clear_of = [&](const Disc& d) {
            for (size_t i = 0; i < a.factors.size(); ++i)
                if (!disjoint(d, a.factors[i].host, opt.sep_margin))
                    detail::report(&rep.findings, &ok, "PairingGeometryFailure",
                                   label + ": disc meets the host of factor " + std::to_string(i));
            for (size_t k = 0; k < a.hnn.size(); ++k) {
                if (k == j) continue;
                if (!disjoint(d, a.hnn[k].d1, opt.sep_margin) ||
                    !disjoint(d, a.hnn[k].d2, opt.sep_margin))
                    detail::report(&rep.findings, &ok, "PairingGeometryFailure",
                                   label + ": disc meets the discs of pairing " +
                                       std::to_string(k));
            }
        };
        clear_of(h.d1);
        clear_of(h.d2);
    }
    try {
        for_each_reduced_word(a, max_depth, [&](const Word& w) {
            if (identity_distance(w.value) <= opt.id_eps)
                detail::report(&rep.findings, &ok, "WordTriviality",
                               "reduced word " + w.name + " evaluates to the identity");
        }, opt.word_cap);
    } catch (const Error& e) {
        detail::report(&rep.findings, &ok, e.code(), e.what());
    }
    return rep;
}

struct LimitPoint {
    SpherePoint point;
    std::string word;
};

namespace detail {

// The disc a reduced word carries: x1(x2(...x_{m-1}(target(x_m)))).
// Folded right to left so every transport step applies one well-scaled
// letter; going through the full prefix product loses the radii of deep
// discs to cancellation.
inline Disc word_disc(const std::vector<const Letter*>& chain) {
    Disc d = chain.back()->target;
    for (size_t i = chain.size() - 1; i-- > 0;) d = apply(chain[i]->g, d);
    return d;
}

} // namespace detail

// One point per maximal-depth reduced word: the center of the nested disc
// carried by the word. Callers are expected to have verified the assembly.
inline std::vector<LimitPoint> sample_limit_set(const GroupAssembly& a, int depth,
                                                long cap = 10'000'000) {
    std::vector<LimitPoint> out;
    std::vector<detail::Letter> letters = detail::letter_table(a);
    if (letters.empty() || depth <= 0) return out;
    long projected = detail::count_reduced_words(letters, depth, cap);
    if (projected > cap)
        fail("DepthExplosion", "projected word count exceeds the cap of " + std::to_string(cap));
    std::vector<const detail::Letter*> chain;
    std::function<void(const detail::WalkState&, const std::string&, int)> go =
        [&](const detail::WalkState& s, const std::string& prefix_name, int left) {
            for (const detail::Letter& l : letters) {
                detail::WalkState next;
                if (!detail::may_follow(s, l, next)) continue;
                std::string word_name =
                    prefix_name.empty() ? l.name : prefix_name + "." + l.name;
                chain.push_back(&l);
                if (left == 1)
                    out.push_back({detail::word_disc(chain).center(), word_name});
                else
                    go(next, word_name, left - 1);
                chain.pop_back();
            }
        };
    go(detail::WalkState{}, "", depth);
    return out;
}

// Nested-disc property: along every reduced-word prefix chain each disc
// contains its successor and chordal diameters strictly decrease after
// the first step.
inline std::vector<Finding> check_nesting(const GroupAssembly& a, int depth,
                                          long cap = 10'000'000) {
    std::vector<Finding> findings;
    std::vector<detail::Letter> letters = detail::letter_table(a);
    if (letters.empty() || depth <= 0) return findings;
    long projected = detail::count_reduced_words(letters, depth, cap);
    if (projected > cap)
        fail("DepthExplosion", "projected word count exceeds the cap of " + std::to_string(cap));
    bool ok = true;
    std::vector<const detail::Letter*> chain;
    std::function<void(const detail::WalkState&, std::optional<Disc>, const std::string&, int)>
        go = [&](const detail::WalkState& s, std::optional<Disc> prev,
                 const std::string& prefix_name, int left) {
            if (left == 0) return;
            for (const detail::Letter& l : letters) {
                detail::WalkState next;
                if (!detail::may_follow(s, l, next)) continue;
                chain.push_back(&l);
                Disc d = detail::word_disc(chain);
                std::string word_name =
                    prefix_name.empty() ? l.name : prefix_name + "." + l.name;
                if (prev) {
                    if (!contained_in(d, *prev, -1e-12))
                        detail::report(&findings, &ok, "NestingFailure",
                                       "disc of " + word_name + " escapes its predecessor");
                    double d_prev = chordal_diameter(*prev), d_cur = chordal_diameter(d);
                    bool clamped = chain.size() == 2 && d_prev >= 2.0 - 1e-9;
                    if (!(d_cur < d_prev) && !clamped)
                        detail::report(&findings, &ok, "NestingFailure",
                                       "disc diameter fails to decrease at " + word_name);
                }
                go(next, d, word_name, left - 1);
                chain.pop_back();
            }
        };
    go(detail::WalkState{}, std::nullopt, "", depth);
    return findings;
}

// Union of the first-level nested discs: pairing discs of every factor
// and HNN pair, plus the torsion images of host complements for factors
// without pairings.
inline std::vector<Disc> initial_discs(const GroupAssembly& a) {
    std::vector<Disc> out;
    for (const detail::Letter& l : detail::letter_table(a)) out.push_back(l.target);
    return out;
}

} // namespace schottky
