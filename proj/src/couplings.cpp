#include "syk/couplings.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "syk/subsets.hpp"

namespace syk {

Dist dist_from_string(const std::string& s) {
    if (s == "gaussian") return Dist::gaussian;
    if (s == "rademacher") return Dist::rademacher;
    if (s == "uniform") return Dist::uniform;
    throw std::invalid_argument("unknown distribution: " + s);
}

std::string dist_to_string(Dist d) {
    switch (d) {
        case Dist::gaussian: return "gaussian";
        case Dist::rademacher: return "rademacher";
        default: return "uniform";
    }
}

CouplingTensor sample_couplings(int n, int q, Dist dist, std::uint64_t seed, std::uint64_t budget) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("sample_couplings: n must be positive even");
    if (q < 1 || q >= n) throw std::invalid_argument("sample_couplings: need 1 <= q < n");
    const std::uint64_t count = binomial_u64(n, q);
    if (count > budget)
        throw resource_limit_error("sample_couplings: binom(n,q) exceeds coupling budget");

    CouplingTensor t;
    t.n = n;
    t.q = q;
    t.dist = dist;
    t.seed = seed;
    t.values.resize(count);

    std::mt19937_64 rng(seed);
    switch (dist) {
        case Dist::gaussian: {
            std::normal_distribution<double> g(0.0, 1.0);
            for (auto& v : t.values) v = g(rng);
            break;
        }
        case Dist::rademacher: {
            for (auto& v : t.values) v = (rng() & 1) ? 1.0 : -1.0;
            break;
        }
        case Dist::uniform: {
            const double s3 = std::sqrt(3.0); // variance 1 on (-sqrt3, sqrt3)
            std::uniform_real_distribution<double> u(-s3, s3);
            for (auto& v : t.values) v = u(rng);
            break;
        }
    }
    return t;
}

} // namespace syk
