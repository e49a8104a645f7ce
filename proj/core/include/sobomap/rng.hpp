#pragma once

#include <cstdint>
#include <cmath>

#include "sobomap/vec.hpp"

namespace sobomap {

// splitmix64; used both as a generator and to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64. Every estimator derives an independent
// stream per (seed, stream label, block index), so results do not depend on
// how blocks are scheduled across workers.
struct Rng {
    std::uint64_t s[4];

    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : s) si = splitmix64(x);
    }
    static Rng stream(std::uint64_t seed, std::uint64_t label, std::uint64_t block) {
        std::uint64_t x = seed;
        std::uint64_t a = splitmix64(x) ^ (label * 0x9e3779b97f4a7c15ULL);
        std::uint64_t b = a ^ (block + 0x632be59bd9b4e019ULL);
        std::uint64_t y = a * 31 + b;
        return Rng(splitmix64(y) ^ splitmix64(b));
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t next() {
        std::uint64_t r = rotl(s[1] * 5, 7) * 9;
        std::uint64_t t = s[1] << 17;
        s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3];
        s[2] ^= t; s[3] = rotl(s[3], 45);
        return r;
    }
    // uniform in [0,1)
    double u01() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    Vec in_box(const Vec& lo, const Vec& hi) {
        Vec x(lo.dim());
        for (int i = 0; i < lo.dim(); ++i) x[i] = uniform(lo[i], hi[i]);
        return x;
    }
    // standard normal (Box-Muller, one value per call; cache dropped for determinism clarity)
    double normal() {
        double u1 = u01(), u2 = u01();
        while (u1 <= 1e-300) u1 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    // uniform direction on the euclidean unit sphere S^{n-1}
    Vec on_sphere(int n) {
        Vec v(n);
        double r = 0;
        do {
            for (int i = 0; i < n; ++i) v[i] = normal();
            r = norm2(v);
        } while (r < 1e-12);
        return v * (1.0 / r);
    }
    // uniform in the euclidean unit ball B^n
    Vec in_ball(int n) {
        Vec v = on_sphere(n);
        double r = std::pow(u01(), 1.0 / n);
        return v * r;
    }
};

// FNV-1a over a string; labels Monte-Carlo streams by quantity.
inline std::uint64_t stream_label(const char* tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char* p = tag; *p; ++p) h = (h ^ std::uint64_t(*p)) * 1099511628211ULL;
    return h;
}

}  // namespace sobomap
