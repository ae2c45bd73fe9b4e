#pragma once

// Portable seeded sampling. std::mt19937_64 has a bit-exact output sequence
// mandated by the standard; the standard distributions do not, so bounded
// draws are done here by rejection to keep runs reproducible across
// toolchains.

#include <cstdint>
#include <random>

namespace kp {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent per-instance seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform integer in [0, bound) for bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

}  // namespace kp
