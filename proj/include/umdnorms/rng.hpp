#pragma once

#include <cstdint>
#include <random>

namespace umdnorms {

// splitmix64; used to derive independent sub-seeds from a master seed so that
// any single restart or record can be reproduced in isolation.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t counter) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t counter) {
    return std::mt19937_64(split_seed(master, counter));
}

}  // namespace umdnorms
