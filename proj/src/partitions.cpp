#include "syk/partitions.hpp"

#include <stdexcept>

namespace syk {

namespace {

void recurse(int k, std::uint32_t used, PairPartition& acc,
             const std::function<void(const PairPartition&)>& visit) {
    if (static_cast<int>(acc.blocks.size()) * 2 == k) {
        visit(acc);
        return;
    }
    int a = 0;
    while (used >> a & 1u) ++a; // smallest unpaired element (0-based)
    for (int b = a + 1; b < k; ++b) {
        if (used >> b & 1u) continue;
        acc.blocks.emplace_back(a + 1, b + 1);
        recurse(k, used | (1u << a) | (1u << b), acc, visit);
        acc.blocks.pop_back();
    }
}

} // namespace

void for_each_pair_partition(int k, const std::function<void(const PairPartition&)>& visit) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("pair partitions need even k >= 0");
    if (k > 16) throw resource_limit_error("pair partition enumeration capped at k = 16");
    PairPartition acc;
    acc.blocks.reserve(k / 2);
    recurse(k, 0, acc, visit);
}

std::vector<PairPartition> enumerate_pair_partitions(int k) {
    std::vector<PairPartition> out;
    for_each_pair_partition(k, [&](const PairPartition& p) { out.push_back(p); });
    return out;
}

int crossing_number(const PairPartition& p) {
    int c = 0;
    const auto& b = p.blocks;
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t s = r + 1; s < b.size(); ++s) {
            // blocks sorted by first element: crossing iff b[r].first < b[s].first < b[r].second < b[s].second
            if (b[s].first < b[r].second && b[r].second < b[s].second) ++c;
        }
    return c;
}

double double_factorial_odd(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("double_factorial_odd needs even k >= 0");
    double v = 1.0;
    for (int m = k - 1; m > 1; m -= 2) v *= m;
    return v;
}

std::uint64_t catalan_moment(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("catalan_moment needs even k >= 0");
    const int h = k / 2;
    std::uint64_t c = 1;
    for (int i = 0; i < h; ++i) { // C_{i+1} = C_i * 2(2i+1)/(i+2)
        c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (i + 2);
    }
    return c;
}

} // namespace syk
