#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "syk/errors.hpp"

namespace syk {

// Coupling laws, all normalized to mean 0 / variance 1.
enum class Dist { gaussian, rademacher, uniform };

Dist dist_from_string(const std::string& s);
std::string dist_to_string(Dist d);

// J_R for R in I_n, stored dense in colexicographic rank order of q-subsets.
struct CouplingTensor {
    int n = 0;
    int q = 0;
    Dist dist = Dist::gaussian;
    std::uint64_t seed = 0;
    std::vector<double> values; // length binom(n,q)
};

// Deterministic given (seed, dist, n, q).  budget caps the value count.
CouplingTensor sample_couplings(int n, int q, Dist dist, std::uint64_t seed,
                                std::uint64_t budget = std::uint64_t{1} << 24);

} // namespace syk
