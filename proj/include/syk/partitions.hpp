#pragma once
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "syk/errors.hpp"

namespace syk {

// k/2 unordered pairs partitioning {1..k}; blocks stored (a<b), sorted by a.
struct PairPartition {
    std::vector<std::pair<int, int>> blocks;
};

// Visits all (k-1)!! pair partitions without materializing them; the visitor
// receives blocks sorted by smallest element.
void for_each_pair_partition(int k, const std::function<void(const PairPartition&)>& visit);

// Materialized enumeration; k <= 16 keeps the count at (15)!! = 2,027,025.
std::vector<PairPartition> enumerate_pair_partitions(int k);

// Number of block pairs {r,s} interleaving as a < b < c < d.
int crossing_number(const PairPartition& p);

// (k-1)!! for even k >= 0 (empty product for k = 0).
double double_factorial_odd(int k);

// k-th Catalan-moment of the semicircle: k!/((k/2)!((k/2)+1)!) for even k.
std::uint64_t catalan_moment(int k);

} // namespace syk
