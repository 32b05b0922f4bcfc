#pragma once

#include <cstdint>
#include <string_view>

// Deterministic randomness helpers. Everything here is a pure function of its
// inputs with a fixed bit-level definition, so runs reproduce byte-identically
// across platforms, standard libraries, and worker schedules. That rules out
// std::uniform_*_distribution, whose output is implementation-defined.

namespace psearch {

inline constexpr std::uint64_t splitmix64_step(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// FNV-1a over a byte string, seeded, finalized with a splitmix avalanche.
inline std::uint64_t stable_hash64(std::uint64_t seed, std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t s = h;
    return splitmix64_step(s);
}

inline std::uint64_t stable_hash64(std::uint64_t seed, std::string_view tag,
                                   std::string_view bytes) {
    return stable_hash64(stable_hash64(seed, tag), bytes);
}

/// Per-seed stream derivation: hash(master_seed, seed_id).
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view seed_id) {
    return stable_hash64(master_seed, "seed-stream", seed_id);
}

/// Uniform double in [0, 1) from a 64-bit word (53-bit mantissa).
inline double u01_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_step(state_); }

    double next_u01() { return u01_from_bits(next()); }

    /// Uniform index in [0, n). Lemire reduction; the O(n/2^64) bias is
    /// irrelevant here and the mapping is fully deterministic.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace psearch
