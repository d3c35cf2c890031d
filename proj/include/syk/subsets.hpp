#pragma once
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace syk {

// Exact binomial coefficient in 64-bit; desk-scale arguments only (n <= ~60).
// Multiplies in an order that keeps intermediates integral.
inline std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

inline double binomial_d(int n, int k) { return static_cast<double>(binomial_u64(n, k)); }

// Colexicographic rank of a sorted q-subset {i_1 < ... < i_q} of {1..n}:
//   rank = sum_j C(i_j - 1, j),  j = 1..q  (0-based rank).
// O(q) both ways; inverse below walks each coordinate down greedily.
inline std::uint64_t colex_rank(const std::vector<int>& indices) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < indices.size(); ++j) {
        r += binomial_u64(indices[j] - 1, static_cast<int>(j) + 1);
    }
    return r;
}

inline std::vector<int> colex_unrank(std::uint64_t rank, int n, int q) {
    std::vector<int> out(q);
    for (int j = q; j >= 1; --j) {
        int v = j;           // smallest value the j-th (1-based) coordinate can take
        // largest v with C(v-1, j) <= rank, scanning down from n
        for (int cand = n; cand >= j; --cand) {
            if (binomial_u64(cand - 1, j) <= rank) { v = cand; break; }
        }
        out[j - 1] = v;
        rank -= binomial_u64(v - 1, j);
        n = v - 1;
    }
    if (rank != 0) throw std::invalid_argument("colex_unrank: rank out of range");
    return out;
}

} // namespace syk
