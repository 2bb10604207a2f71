#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bandit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Derives an independent engine seed from a run seed and a purpose tag.
// Streams are keyed by tag (e.g. "policy/thompson"), so adding a policy to a
// run never shifts the random streams of the others.
inline std::uint64_t substream_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::uint64_t s = seed ^ h;
    splitmix64(s);
    return splitmix64(s);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::string_view tag) {
    return std::mt19937_64(substream_seed(seed, tag));
}

}  // namespace bandit
