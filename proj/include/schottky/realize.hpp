#pragma once

// Geometric realization of an admissible signature as a placed assembly.

#include "schottky/assembly.hpp"
#include "schottky/signatures.hpp"

namespace schottky {

// Deterministic anchor layout: factor i is placed in the round disc of
// radius 3 centered at 12 i on the real axis.
inline Disc default_anchor(int index) {
    return disc_from_center_radius(Complex(12.0 * index, 0.0), 3.0, true);
}

inline GroupAssembly realize(const Signature& s) {
    Admissibility adm = is_admissible(s);
    if (!adm.admissible) fail("Inadmissible", adm.reason);
    (void)rank(s); // integral by construction; surfaces NonIntegralRank early
    std::vector<BasicGroup> factors;
    int idx = 0;
    auto add = [&](BasicParams p) {
        factors.push_back(make_basic(p, s.n, default_anchor(idx)));
        ++idx;
    };
    for (int k = 0; k < s.a0; ++k) add({BasicKind::T0, 0, 0, {}});
    for (int k = 0; k < s.a1; ++k) add({BasicKind::T1, 0, 0, {}});
    for (int l : s.t2_orders) add({BasicKind::T2, 0, l, {}});
    for (int m : s.t3_orders) add({BasicKind::T3, 0, m, {}});
    for (int d : s.t4_orders) add({BasicKind::T4, 0, d, {}});
    for (int m : s.t5_orders) add({BasicKind::T5, 0, m, {}});
    for (int k = 0; k < s.a6; ++k) add({BasicKind::T6, 0, 0, {}});
    for (int k = 0; k < s.a7; ++k) add({BasicKind::T7, 0, 0, {}});
    for (const T8Sub& f : s.t8) add({BasicKind::T8, 0, 0, f});
    return free_product(std::move(factors));
}

// Signature recovered from an assembly's factor metadata.
inline Signature signature_of(const GroupAssembly& a) {
    Signature s;
    s.n = a.n;
    for (const BasicGroup& f : a.factors) {
        switch (f.kind) {
            case BasicKind::T0: ++s.a0; break;
            case BasicKind::T1: ++s.a1; break;
            case BasicKind::T2: s.t2_orders.push_back(f.order); break;
            case BasicKind::T3: s.t3_orders.push_back(f.order); break;
            case BasicKind::T4: s.t4_orders.push_back(f.order); break;
            case BasicKind::T5: s.t5_orders.push_back(f.order); break;
            case BasicKind::T6: ++s.a6; break;
            case BasicKind::T7: ++s.a7; break;
            case BasicKind::T8: {
                T8Sub sub;
                if (f.sub)
                    for (const BasicGroup& g : *f.sub) {
                        if (g.kind == BasicKind::T0) ++sub.lox_count;
                        else sub.elliptic_orders.push_back(g.order);
                    }
                sub.has_glide = sub.glide_implied();
                s.t8.push_back(std::move(sub));
                break;
            }
        }
    }
    return canonical(s);
}

} // namespace schottky
