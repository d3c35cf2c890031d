#include "syk/q2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syk/bits.hpp"
#include "syk/dense_eig.hpp"
#include "syk/errors.hpp"
#include "syk/subsets.hpp"

namespace syk {

AntisymmetricMatrix antisymmetric_from_couplings(const CouplingTensor& t) {
    if (t.q != 2) throw std::invalid_argument("antisymmetric_from_couplings requires q = 2");
    AntisymmetricMatrix b;
    b.n = t.n;
    b.seed = t.seed;
    b.a.assign(static_cast<std::size_t>(t.n) * t.n, 0.0);
    const std::uint64_t count = binomial_u64(t.n, 2);
    for (std::uint64_t r = 0; r < count; ++r) {
        const std::vector<int> ij = colex_unrank(r, t.n, 2);
        const int i = ij[0] - 1, j = ij[1] - 1; // to 0-based
        b.at(i, j) = t.values[r];
        b.at(j, i) = -t.values[r];
    }
    return b;
}

AntisymmetricMatrix sample_antisymmetric(int n, Dist dist, std::uint64_t seed) {
    return antisymmetric_from_couplings(sample_couplings(n, 2, dist, seed));
}

std::vector<double> mu_spectrum(const AntisymmetricMatrix& b) {
    if (b.n <= 0 || b.n % 2 != 0) throw std::invalid_argument("mu_spectrum: n must be positive even");
    const std::size_t n = static_cast<std::size_t>(b.n);
    std::vector<cplx> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = cplx{0.0, b.a[i]}; // iB is Hermitian
    std::vector<double> w = hermitian_eigenvalues_inplace(m.data(), n); // ascending
    const double scale = std::max({std::abs(w.front()), std::abs(w.back()), 1e-300});
    for (std::size_t j = 0; j < n / 2; ++j) {
        if (std::abs(w[j] + w[n - 1 - j]) > 1e-10 * scale)
            throw numeric_error("mu_spectrum: +- pairing of iB eigenvalues violated", w[n - 1 - j],
                                std::abs(w[j] + w[n - 1 - j]));
    }
    std::vector<double> mu(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) mu[j] = std::max(w[n - 1 - j], 0.0); // descending
    return mu;
}

double q2_lambda_max(const AntisymmetricMatrix& b) {
    const std::vector<double> mu = mu_spectrum(b);
    double s = 0.0;
    for (double m : mu) s += m;
    return s / std::sqrt(binomial_d(b.n, 2));
}

EmpiricalMeasure q2_full_spectrum(const AntisymmetricMatrix& b, int n_cap) {
    if (b.n > n_cap)
        throw resource_limit_error("q2_full_spectrum: n exceeds the sign-pattern cap");
    const std::vector<double> mu = mu_spectrum(b);
    const int half = b.n / 2;
    const double norm = 1.0 / std::sqrt(binomial_d(b.n, 2));
    EmpiricalMeasure m;
    m.n = b.n;
    m.q = 2;
    m.seed = b.seed;
    m.eigenvalues.resize(std::size_t{1} << half);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << half); ++s) {
        double acc = 0.0;
        for (int j = 0; j < half; ++j) acc += (s >> j & 1) ? mu[j] : -mu[j];
        m.eigenvalues[s] = acc * norm;
    }
    std::sort(m.eigenvalues.begin(), m.eigenvalues.end());
    return m;
}

SemicircleCheck antisymmetric_semicircle_check(int n, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("semicircle check: samples >= 1");
    std::vector<double> pooled;
    pooled.reserve(static_cast<std::size_t>(samples) * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n) - 1.0);
    for (int s = 0; s < samples; ++s) {
        const auto b = sample_antisymmetric(n, Dist::gaussian, derive_seed(seed, s));
        for (double mu : mu_spectrum(b)) {
            pooled.push_back(mu * scale);
            pooled.push_back(-mu * scale);
        }
    }
    std::sort(pooled.begin(), pooled.end());
    SemicircleCheck out;
    out.pooled = pooled.size();
    for (double x : pooled) {
        out.mean_sq += x * x;
        out.mean_abs += std::abs(x);
    }
    out.mean_sq /= static_cast<double>(pooled.size());
    out.mean_abs /= static_cast<double>(pooled.size());
    EmpiricalMeasure m;
    m.n = n;
    m.q = 2;
    m.seed = seed;
    m.eigenvalues = std::move(pooled);
    out.ks = ks_distance(m, LimitDensity::semicircle());
    return out;
}

} // namespace syk
