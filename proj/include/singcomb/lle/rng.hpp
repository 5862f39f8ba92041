#pragma once

#include <cstdint>

namespace singcomb::lle {

// Counter-based (stateless) random values: every draw is a pure function
// of (seed, quantity, index), so parallel sweeps need no shared RNG state
// and results do not depend on evaluation order. Mixing is the splitmix64
// finalizer.
namespace rng {

constexpr std::uint64_t kQuantityDetuning = 1;
constexpr std::uint64_t kQuantityCoupling = 2;
constexpr std::uint64_t kQuantityInitNoise = 3;
constexpr std::uint64_t kQuantitySeedDerive = 4;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t quantity,
                                     std::uint64_t index) {
    std::uint64_t h = seed + 0x9e3779b97f4a7c15ull;
    h = mix64(h ^ (quantity * 0xc2b2ae3d27d4eb4full));
    h = mix64(h ^ (index * 0x165667b19e3779f9ull));
    return h;
}

// Uniform in [0, 1), 53-bit resolution.
inline double uniform01(std::uint64_t seed, std::uint64_t quantity,
                        std::uint64_t index) {
    return static_cast<double>(counter_hash(seed, quantity, index) >> 11) *
           0x1.0p-53;
}

// Uniform in [-1, 1).
inline double uniform_pm1(std::uint64_t seed, std::uint64_t quantity,
                          std::uint64_t index) {
    return 2.0 * uniform01(seed, quantity, index) - 1.0;
}

}  // namespace rng
}  // namespace singcomb::lle
