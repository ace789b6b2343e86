#pragma once

#include <cstdint>
#include <random>

namespace wl {

using Rng = std::mt19937_64;

// splitmix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for replica r derived from a master seed.  Depends only on (master, r),
// never on the replica count, so enlarging a study keeps earlier replicas valid.
constexpr std::uint64_t replica_seed(std::uint64_t master, std::uint64_t replica) {
    return splitmix64(master + (replica + 1) * 0x9e3779b97f4a7c15ULL);
}

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace wl
