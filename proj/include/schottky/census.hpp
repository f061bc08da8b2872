#pragma once

// Census of n = 2 signatures: the tuple sets X_g, the auxiliary counts
// N_g(alpha) and fibers Y(alpha), with both a closed form and a
// brute-force enumeration. The brute force is the source of truth; the
// closed form is a checked accelerator.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "schottky/errors.hpp"

namespace schottky {

using SixTuple = std::array<int, 6>; // (a1, a2, a3, a4, a5, a6)

// All (a1..a6) with a1+a3+a5+a6 > 0 and g+3 = 4a1+2a2+3a3+4a4+4a5+4a6,
// in lexicographic order. With a1..a5 fixed, a6 is determined, so the
// nested ascending loops emit sorted output directly.
inline std::vector<SixTuple> enumerate_Xg(int g) {
    if (g < 1) fail("OutOfRange", "genus must be >= 1");
    const int total = g + 3;
    std::vector<SixTuple> out;
    for (int a1 = 0; 4 * a1 <= total; ++a1) {
        int r1 = total - 4 * a1;
        for (int a2 = 0; 2 * a2 <= r1; ++a2) {
            int r2 = r1 - 2 * a2;
            for (int a3 = 0; 3 * a3 <= r2; ++a3) {
                int r3 = r2 - 3 * a3;
                if (r3 % 4 != 0) continue; // 4(a4 + a5 + a6) remains
                for (int a4 = 0; 4 * a4 <= r3; ++a4) {
                    int r4 = r3 - 4 * a4;
                    for (int a5 = 0; 4 * a5 <= r4; ++a5) {
                        int a6 = (r4 - 4 * a5) / 4;
                        if (a1 + a3 + a5 + a6 == 0) continue;
                        out.push_back({a1, a2, a3, a4, a5, a6});
                    }
                }
            }
        }
    }
    return out;
}

// |{(x,y,z) >= 0 : x+y+z = alpha}| = (1+alpha)(2+alpha)/2.
inline long count_Y(int alpha) {
    if (alpha < 0) fail("OutOfRange", "alpha must be >= 0");
    return static_cast<long>(1 + alpha) * (2 + alpha) / 2;
}

inline long count_Y_bruteforce(int alpha) {
    long c = 0;
    for (int x = 0; x <= alpha; ++x)
        for (int y = 0; x + y <= alpha; ++y) ++c;
    return c;
}

namespace detail {

inline void check_Ng_range(int g, int alpha) {
    if (g < 1) fail("OutOfRange", "genus must be >= 1");
    if (alpha < 0 || 4 * alpha > g + 3) fail("OutOfRange", "alpha out of [0, floor((g+3)/4)]");
}

} // namespace detail

// |{(beta,gamma,delta) >= 0 : g+3 = 4 alpha + 2 beta + 3 gamma + 4 delta,
//   alpha + gamma > 0}| by direct enumeration.
inline long count_Ng_alpha_bruteforce(int g, int alpha) {
    detail::check_Ng_range(g, alpha);
    const int rem = g + 3 - 4 * alpha;
    long c = 0;
    for (int gamma = 0; 3 * gamma <= rem; ++gamma) {
        if (alpha + gamma == 0) continue;
        int r = rem - 3 * gamma;
        if (r % 2 != 0) continue; // 2 beta + 4 delta is even
        for (int delta = 0; 4 * delta <= r; ++delta) ++c;
    }
    return c;
}

// Closed form. The summation index runs over the admissible parity class
// of gamma (odd gamma for even g, even gamma for odd g) and each term
// counts the delta choices 1 + floor((g+3-4a-3gamma)/4).
inline long count_Ng_alpha(int g, int alpha) {
    detail::check_Ng_range(g, alpha);
    const int q = (g + 3 - 4 * alpha) / 3;
    long sum = 0;
    if (g % 2 == 0) {
        const int l_max = (q % 2 != 0) ? (q + 1) / 2 : q / 2;
        for (int l = 1; l <= l_max; ++l) sum += 1 + (g + 6 - 4 * alpha - 6 * l) / 4;
    } else {
        const int l_min = (alpha == 0) ? 1 : 0;
        const int l_max = (q % 2 == 0) ? q / 2 : (q - 1) / 2;
        for (int l = l_min; l <= l_max; ++l) sum += 1 + (g + 3 - 4 * alpha - 6 * l) / 4;
    }
    return sum;
}

// #X_g = 1/2 sum_alpha (2+alpha)(1+alpha) #N_g(alpha).
inline long count_Xg(int g) {
    if (g < 1) fail("OutOfRange", "genus must be >= 1");
    long sum = 0;
    for (int alpha = 0; 4 * alpha <= g + 3; ++alpha)
        sum += static_cast<long>(2 + alpha) * (1 + alpha) * count_Ng_alpha(g, alpha);
    return sum / 2;
}

inline long count_Xg_bruteforce(int g) {
    if (g < 1) fail("OutOfRange", "genus must be >= 1");
    // expand each (alpha,beta,gamma,delta) solution by its fiber |Y(alpha)|
    long sum = 0;
    for (int alpha = 0; 4 * alpha <= g + 3; ++alpha)
        sum += count_Y(alpha) * count_Ng_alpha_bruteforce(g, alpha);
    return sum;
}

struct CensusRow {
    int g = 0;
    std::vector<SixTuple> tuples;
    long count_bruteforce = 0;
    long count_closedform = 0;
    bool match() const {
        return count_bruteforce == count_closedform &&
               count_bruteforce == static_cast<long>(tuples.size());
    }
};

inline CensusRow census_row(int g) {
    CensusRow row;
    row.g = g;
    row.tuples = enumerate_Xg(g);
    row.count_bruteforce = count_Xg_bruteforce(g);
    row.count_closedform = count_Xg(g);
    return row;
}

// The substitution alpha = a1+a5+a6, beta = a2, gamma = a3, delta = a4
// maps X_g onto the quadruple solutions with fiber size |Y(alpha)|.
inline bool check_census_bijection(int g) {
    std::vector<SixTuple> tuples = enumerate_Xg(g);
    long direct = 0;
    for (int alpha = 0; 4 * alpha <= g + 3; ++alpha) {
        long n_alpha = count_Ng_alpha_bruteforce(g, alpha);
        // every quadruple with this alpha expands to |Y(alpha)| tuples
        long fiber = count_Y(alpha);
        direct += n_alpha * fiber;
        long seen = 0;
        for (const SixTuple& t : tuples)
            if (t[0] + t[4] + t[5] == alpha) ++seen;
        if (seen != n_alpha * fiber) return false;
    }
    return direct == static_cast<long>(tuples.size());
}

} // namespace schottky
