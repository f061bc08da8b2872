#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

namespace schottky {

using Complex = std::complex<double>;

// Default tolerances. All geometric/algebraic checks take an explicit
// epsilon with one of these as default.
inline constexpr double kDetEps = 1e-12;      // matrix normalization
inline constexpr double kClassEps = 1e-9;     // classification boundaries
inline constexpr double kSepMargin = 1e-6;    // strict disc separation (radians on the sphere)
inline constexpr double kIdentityEps = 1e-6;  // word-nontriviality threshold
inline constexpr double kAmbiguityBand = 8.0; // NumericallyAmbiguous guard factor

inline bool near(double a, double b, double eps) { return std::abs(a - b) <= eps; }

// 2x2 complex matrix, the projective coordinate workhorse.
struct Mat2 {
    Complex a{}, b{}, c{}, d{};

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend Mat2 operator+(const Mat2& l, const Mat2& r) {
        return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
    }
    friend Mat2 operator-(const Mat2& l, const Mat2& r) {
        return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
    }
    friend Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
    Mat2 conjugated() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    // inverse assuming det == 1
    Mat2 inv_unimodular() const { return {d, -b, -c, a}; }

    double frobenius() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline double dist(const Mat2& l, const Mat2& r) { return (l - r).frobenius(); }

// min over the projective sign ambiguity
inline double dist_pm(const Mat2& l, const Mat2& r) {
    return std::min(dist(l, r), (l + r).frobenius());
}

// Deterministic, platform-independent RNG for property sweeps (splitmix64).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Complex complex_in_box(double half_side) {
        return {uniform(-half_side, half_side), uniform(-half_side, half_side)};
    }

private:
    std::uint64_t state_;
};

} // namespace schottky
