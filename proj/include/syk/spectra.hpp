#pragma once
#include <cstdint>
#include <vector>

#include "syk/couplings.hpp"
#include "syk/hamiltonian.hpp"
#include "syk/lanczos.hpp"
#include "syk/limit.hpp"

namespace syk {

// Empirical spectral measure: sorted eigenvalues plus sampling metadata.
struct EmpiricalMeasure {
    std::vector<double> eigenvalues; // ascending
    int n = 0;
    int q = 0;
    std::uint64_t seed = 0;
};

struct SpectrumOptions {
    std::size_t dense_cap = 4096;        // largest dim we materialize densely
    std::size_t residual_check_dim = 512; // spot-check eigenpairs up to this dim
    bool allow_sectors = true;            // parity-sector split for even q
    std::size_t sector_min_dim = 1024;    // use sectors only above this dim
};

// All 2^{n/2} eigenvalues by dense Hermitian eigendecomposition (parity-sector
// split when applicable).  Spot-checks residuals on 10 random eigenpairs when
// dim <= residual_check_dim.
EmpiricalMeasure full_spectrum(const Hamiltonian& h, const SpectrumOptions& opt = {});

// Extreme eigenvalue via matrix-free Lanczos (see lanczos.hpp).
double extreme_eigenvalue(const Hamiltonian& h, Extreme which, double tol = 1e-8,
                          int max_iter = 300);

// (1/L) sum lambda_i^k
double empirical_moment(const EmpiricalMeasure& m, int k);

struct HistogramView {
    std::vector<double> edges;        // bins+1 ascending
    std::vector<std::uint64_t> counts;
    std::vector<double> density;      // counts / (N * width); integrates to 1
};
HistogramView histogram(const std::vector<double>& values, int bins = 101);

// sup_x |F_emp(x) - F_theory(x)| with the two-sided step convention (the sup
// is attained at an eigenvalue, approached from either side).
double ks_distance(const EmpiricalMeasure& m, const LimitDensity& d);

struct IntersectionStats {
    int n = 0, q = 0;
    std::uint64_t trials = 0;
    std::vector<std::uint64_t> counts; // index j = #{|R cap R'| = j}, j = 0..q
    std::vector<double> pmf;           // counts / trials
    double mean = 0.0;
    double tv_to_poisson = 0.0;        // total variation to Poisson(q^2/n)
};
// Empirical law of |R cap R'| over independent uniform q-subset pairs.
IntersectionStats intersection_statistics(int n, int q, std::uint64_t trials, std::uint64_t seed);

struct VarianceRow {
    int n = 0;
    double variance = 0.0;        // sample variance of (1/L) Tr H^k
    double jackknife_error = 0.0; // jackknife stderr of the variance estimate
    double ratio_binom = 0.0;     // variance * binom(n,q)
    int samples = 0;
};
// Variance of the normalized trace power across a Gaussian ensemble, for each n.
std::vector<VarianceRow> moment_variance_scan(const std::vector<int>& ns, int q, int k,
                                              int samples, std::uint64_t seed,
                                              const SpectrumOptions& opt = {});

// Ensemble of full spectra with per-sample seeds derive_seed(seed, i);
// deterministic regardless of worker count (independent slots, fixed order).
std::vector<EmpiricalMeasure> sample_spectra(int n, int q, Dist dist, int samples,
                                             std::uint64_t seed, const SpectrumOptions& opt = {});

} // namespace syk
