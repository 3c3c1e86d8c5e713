#pragma once

#include <cstdint>
#include <cstring>
#include <random>
#include <span>
#include <string_view>

namespace steallab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

inline std::uint64_t hash_doubles(std::span<const double> v) {
    return fnv1a64(v.data(), v.size() * sizeof(double));
}

// Derives a sub-seed from a master seed and a role tag. Every component of an
// experiment pulls its seed through this, so a single master seed pins the
// whole pipeline.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view role) {
    return splitmix64(master ^ fnv1a64(role));
}

// Deterministic RNG handed around explicitly; never ambient.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1).
    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo,hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * real01(); }

    // Uniform in (-1,1) up to quantization at the ends.
    double uniform_pm1() { return 2.0 * real01() - 1.0; }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        // Rejection-free modulo is biased for huge n; n here is always small
        // relative to 2^64 so the bias is below measurement.
        return static_cast<std::size_t>(engine_() % n);
    }

    // Uniform integer in [lo, hi] inclusive.
    long long int_range(long long lo, long long hi) {
        return lo + static_cast<long long>(index(static_cast<std::size_t>(hi - lo + 1)));
    }

    double normal(double mean, double stddev) {
        // Box-Muller from our own uniforms keeps the stream implementation-defined-free.
        double u1 = real01();
        double u2 = real01();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586 * u2);
    }

    Rng fork(std::string_view role) { return Rng(derive_seed(engine_(), role)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace steallab
