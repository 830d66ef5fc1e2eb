#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nbcolor {

// Seed handling: splitmix64 derives independent sub-stream seeds from a
// master seed, mt19937_64 does the bulk drawing. The identifier below is
// recorded in every output artifact that depends on randomness.
inline constexpr std::string_view kRngAlgorithm = "splitmix64+mt19937_64";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed for sub-stream `stream` of a master seed.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

} // namespace nbcolor
