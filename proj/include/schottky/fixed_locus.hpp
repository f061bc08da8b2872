#pragma once

// Combinatorics of the fixed-point loci of a finite-order (anti)conformal
// automorphism of a handlebody, and of the quotient orbifolds, driven by
// the signature of the uniformizing group.

#include <string>
#include <vector>

#include "schottky/errors.hpp"
#include "schottky/signatures.hpp"

namespace schottky {

struct LocusComponent {
    enum class Shape { Arc, Loop, IsolatedPoint, Disc, BorderedSurface };
    enum class Location { Interior, MeetsBoundary, Boundary };

    Shape shape = Shape::Arc;
    int count = 0;    // number of components of this kind
    int fixed_by = 0; // the components lie in Fix(tau^k) for this k
    Location location = Location::Interior;
    std::string source; // factor kind + order that produced the components
    std::string note;   // records encoded ambiguities, empty otherwise
};

inline const char* to_string(LocusComponent::Shape s) {
    switch (s) {
        case LocusComponent::Shape::Arc: return "arc";
        case LocusComponent::Shape::Loop: return "loop";
        case LocusComponent::Shape::IsolatedPoint: return "point";
        case LocusComponent::Shape::Disc: return "disc";
        case LocusComponent::Shape::BorderedSurface: return "bordered-surface";
    }
    return "?";
}
inline const char* to_string(LocusComponent::Location l) {
    switch (l) {
        case LocusComponent::Location::Interior: return "interior";
        case LocusComponent::Location::MeetsBoundary: return "meets-boundary";
        case LocusComponent::Location::Boundary: return "boundary";
    }
    return "?";
}

// Fixed locus of the order-2n orientation-reversing action, one rule per
// factor. T0/T1 act freely and contribute nothing.
inline std::vector<LocusComponent> locus_report(const Signature& s) {
    Admissibility adm = is_admissible(s);
    if (!adm.admissible) fail("Inadmissible", adm.reason);
    const int n = s.n;
    std::vector<LocusComponent> out;
    auto src = [](BasicKind k, int order) {
        std::string t = to_string(k);
        if (order > 0) t += "(order " + std::to_string(order) + ")";
        return t;
    };
    for (int d : s.t2_orders)
        out.push_back({LocusComponent::Shape::Arc, 2 * n / d, 2 * n / d,
                       LocusComponent::Location::MeetsBoundary, src(BasicKind::T2, d), ""});
    for (int m : s.t3_orders) {
        if (m == 2) {
            out.push_back({LocusComponent::Shape::IsolatedPoint, n, n,
                           LocusComponent::Location::Interior, src(BasicKind::T3, m), ""});
            continue;
        }
        int d = m / 2;
        if ((n / d) % 2 == 0)
            fail("ParityConstraintViolated", "T3 rule needs n/d odd, d = " + std::to_string(d));
        out.push_back({LocusComponent::Shape::Arc, n / d, 2 * n / d,
                       LocusComponent::Location::MeetsBoundary, src(BasicKind::T3, m), ""});
        out.push_back({LocusComponent::Shape::IsolatedPoint, n / d, n / d,
                       LocusComponent::Location::Interior, src(BasicKind::T3, m), ""});
    }
    for (int d : s.t4_orders)
        out.push_back({LocusComponent::Shape::Loop, 2 * n / d, 2 * n / d,
                       LocusComponent::Location::Interior, src(BasicKind::T4, d), ""});
    for (int m : s.t5_orders) {
        if (m == 2) {
            out.push_back({LocusComponent::Shape::IsolatedPoint, 2 * n, n,
                           LocusComponent::Location::Interior, src(BasicKind::T5, m), ""});
            continue;
        }
        int d = m / 2;
        if ((n / d) % 2 == 0)
            fail("ParityConstraintViolated", "T5 rule needs n/d odd, d = " + std::to_string(d));
        out.push_back({LocusComponent::Shape::Loop, 2 * n / d, 2 * n / d,
                       LocusComponent::Location::Interior, src(BasicKind::T5, m),
                       "stated as loops although the downstairs conical component is an arc"});
        out.push_back({LocusComponent::Shape::IsolatedPoint, 2 * n / d, n / d,
                       LocusComponent::Location::Interior, src(BasicKind::T5, m), ""});
    }
    for (int k = 0; k < s.a6; ++k)
        out.push_back({LocusComponent::Shape::Loop, n, n, LocusComponent::Location::Interior,
                       src(BasicKind::T6, 0), ""});
    for (int k = 0; k < s.a7; ++k)
        out.push_back({LocusComponent::Shape::Disc, n, n,
                       LocusComponent::Location::MeetsBoundary, src(BasicKind::T7, 0), ""});
    for (const T8Sub& f : s.t8) {
        (void)f;
        out.push_back({LocusComponent::Shape::BorderedSurface, n, n,
                       LocusComponent::Location::MeetsBoundary, src(BasicKind::T8, 0), ""});
    }
    return out;
}

// Orientation-preserving cyclic case: `a` loxodromic cyclic factors, `b`
// elliptic cyclic factors of orders n_j, `m` abelian factors Z_{l_j} + Z.
struct ConformalLocus {
    std::vector<LocusComponent> components;
    int quotient_genus = 0; // handlebody genus of the quotient
    int quotient_arcs = 0;  // conical arcs downstairs
    int quotient_loops = 0; // conical loops downstairs
};

inline ConformalLocus conformal_locus_report(int a, const std::vector<int>& elliptic_orders,
                                             const std::vector<int>& abelian_orders, int n) {
    if (n < 1 || a < 0) fail("OutOfRange", "need n >= 1 and a >= 0");
    ConformalLocus out;
    for (int nj : elliptic_orders) {
        if (nj < 2 || n % nj != 0)
            fail("InvalidOrder", "elliptic order " + std::to_string(nj) + " must divide n");
        out.components.push_back({LocusComponent::Shape::Arc, n / nj, n / nj,
                                  LocusComponent::Location::MeetsBoundary,
                                  "elliptic(order " + std::to_string(nj) + ")", ""});
    }
    for (int lj : abelian_orders) {
        if (lj < 2 || n % lj != 0)
            fail("InvalidOrder", "abelian torsion order " + std::to_string(lj) + " must divide n");
        out.components.push_back({LocusComponent::Shape::Loop, n / lj, n / lj,
                                  LocusComponent::Location::Interior,
                                  "abelian(order " + std::to_string(lj) + ")", ""});
    }
    out.quotient_genus = static_cast<int>(elliptic_orders.size() + abelian_orders.size());
    out.quotient_arcs = static_cast<int>(elliptic_orders.size());
    out.quotient_loops = static_cast<int>(abelian_orders.size());
    return out;
}

// ---- quotient orbifolds, odd n, no T6/T7/T8 ----

struct OrbifoldSignature {
    int genus = 0;            // non-orientable genus for sign '-', genus for '+'
    char orientability = '+'; // '+' or '-'
    std::vector<int> cone_orders;
};

namespace detail {

inline void require_odd_regime(const Signature& s) {
    validate(s);
    if (s.n % 2 == 0 || s.a6 != 0 || s.a7 != 0 || !s.t8.empty())
        fail("RegimeMismatch", "requires odd n and no T6/T7/T8 factors");
}

} // namespace detail

// Quotient of the sphere by the full group (Klein orbifold, sign -) and by
// its orientation-preserving half (Riemann orbifold, sign +). Cone points
// of order 1 are elided from the lists.
inline std::pair<OrbifoldSignature, OrbifoldSignature> quotient_orbifold_signatures(
    const Signature& s) {
    detail::require_odd_regime(s);
    OrbifoldSignature full, half;
    int k = 2 * (s.a0 + s.a1) + s.a3() + 2 * s.a4() + 2 * s.a5();
    full.genus = k;
    full.orientability = '-';
    half.genus = k - 1;
    half.orientability = '+';
    for (int l : s.t2_orders) {
        full.cone_orders.insert(full.cone_orders.end(), {l, l});
        half.cone_orders.insert(half.cone_orders.end(), {l, l, l, l});
    }
    for (int m : s.t3_orders) {
        int r = m / 2;
        if (r >= 2) {
            full.cone_orders.push_back(r);
            half.cone_orders.insert(half.cone_orders.end(), {r, r});
        }
    }
    std::sort(full.cone_orders.begin(), full.cone_orders.end());
    std::sort(half.cone_orders.begin(), half.cone_orders.end());
    return {full, half};
}

// Genus of the bounding surface from the quotient-orbifold data:
// g = n(2(a0+a1)+a3+2a4+2a5-2 + 2 sum(1-1/l_j) + sum(1-1/r_l)) + 1.
inline long genus_from_orbifold(const Signature& s) {
    detail::require_odd_regime(s);
    const long n = s.n;
    long g = n * (2L * (s.a0 + s.a1) + s.a3() + 2L * s.a4() + 2L * s.a5() - 2);
    for (int l : s.t2_orders) {
        if (n % l != 0) fail("NonIntegral", "order must divide n");
        g += 2 * (n - n / l);
    }
    for (int m : s.t3_orders) {
        long r = m / 2;
        if (n % r != 0) fail("NonIntegral", "half-order must divide n");
        g += n - n / r;
    }
    return g + 1;
}

} // namespace schottky
