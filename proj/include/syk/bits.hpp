#pragma once
#include <bit>
#include <cstdint>

namespace syk {

inline int popcount64(std::uint64_t v) { return std::popcount(v); }

// Parity of popcount: 0 or 1.
inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

// splitmix64 step; used to derive independent per-sample seeds from a base
// seed without correlated streams (the usual fix for seed+index aliasing).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index + 1));
}

} // namespace syk
