#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace satspec {

/// splitmix64 finalizer. Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Fixed seed-splitting rule used everywhere a child stream is derived from a
/// master seed: child = mix64(mix64(mix64(master) ^ a) ^ b). Workers never
/// share generator state; each task reconstructs its stream from
/// (master, indices) so results are independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(mix64(mix64(master) ^ a) ^ b);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

/// Uniform double in [0, 1) with 53 random bits. Hand-rolled so streams are
/// identical across standard-library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

/// Standard normal draw via Box-Muller. Consumes exactly two 64-bit words, so
/// the stream layout is fixed; the sine partner is discarded.
inline double normal(std::mt19937_64& rng) {
    double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; // in (0,1)
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace satspec
