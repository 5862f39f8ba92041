#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace singcomb::util {

// FNV-1a, 64 bit. Used for run manifests and counter-RNG key tags.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

}  // namespace singcomb::util
