#pragma once

#include <cstdint>

namespace biquadric {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** — small, fast, and identical on every platform, which keeps
// seeded outputs byte-reproducible regardless of standard library.
struct Rng {
    std::uint64_t s[4];

    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s) word = splitmix64(sm);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t next() {
        std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform in [0,1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-1,1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Stream seed for shard i of a seeded run; shards are scheduling-independent.
inline std::uint64_t shard_seed(std::uint64_t run_seed, std::uint64_t shard) {
    std::uint64_t st = run_seed ^ (0xa076bc9551a3dfb1ULL + shard * 0x9e3779b97f4a7c15ULL);
    return splitmix64(st);
}

}  // namespace biquadric
