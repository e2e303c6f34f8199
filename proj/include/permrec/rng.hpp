#pragma once

#include <cstdint>
#include <random>

namespace permrec {

/// 64-bit Mersenne Twister. Its output sequence is fixed by the C++ standard,
/// so a seed reproduces the same draws on every platform.
using Engine = std::mt19937_64;

/// SplitMix64 output function (Steele, Lea & Flood): a bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed of the independent stream `stream` under the master seed `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ull));
}

/// Uniform integer in [0, bound) by rejection on the raw engine output.
/// std::uniform_int_distribution is avoided because its algorithm differs
/// between standard library implementations.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace permrec
