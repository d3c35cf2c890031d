#include "syk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>

#include "syk/bits.hpp"
#include "syk/dense_eig.hpp"
#include "syk/errors.hpp"
#include "syk/subsets.hpp"

namespace syk {

namespace {

void spot_check_residuals(const Hamiltonian& h, const std::vector<cplx>& vecs,
                          const std::vector<double>& w) {
    const std::size_t dim = w.size();
    if (dim == 0) return;
    const double norm_h = std::max(std::abs(w.front()), std::abs(w.back()));
    std::mt19937_64 rng(derive_seed(0x5b07c4ecULL, dim));
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    StateVector u(dim), hu;
    for (int c = 0; c < 10; ++c) {
        const std::size_t k = pick(rng);
        for (std::size_t i = 0; i < dim; ++i) u[i] = vecs[k * dim + i];
        hu = syk::apply(h, u);
        double r2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) r2 += std::norm(hu[i] - w[k] * u[i]);
        const double res = std::sqrt(r2);
        if (res > 1e-10 * norm_h + 1e-300)
            throw numeric_error("full_spectrum: eigenpair residual exceeds 1e-10 * ||H||", w[k],
                                res);
    }
}

} // namespace

EmpiricalMeasure full_spectrum(const Hamiltonian& h, const SpectrumOptions& opt) {
    const std::size_t dim = h.dim();
    if (dim > opt.dense_cap)
        throw resource_limit_error("full_spectrum: dimension exceeds the dense cap");
    EmpiricalMeasure m;
    m.n = h.n;
    m.q = h.q;
    m.seed = h.seed;
    if (opt.allow_sectors && parity_sector_applicable(h) && dim >= opt.sector_min_dim) {
        std::vector<double> even = parity_sector_eigenvalues(h, 0);
        std::vector<double> odd = parity_sector_eigenvalues(h, 1);
        m.eigenvalues.resize(dim);
        std::merge(even.begin(), even.end(), odd.begin(), odd.end(), m.eigenvalues.begin());
    } else {
        std::vector<cplx> a = dense_matrix(h, opt.dense_cap);
        if (dim <= opt.residual_check_dim) {
            m.eigenvalues = hermitian_eigenpairs_inplace(a.data(), dim);
            spot_check_residuals(h, a, m.eigenvalues);
        } else {
            m.eigenvalues = hermitian_eigenvalues_inplace(a.data(), dim);
        }
    }
    return m;
}

double extreme_eigenvalue(const Hamiltonian& h, Extreme which, double tol, int max_iter) {
    LanczosOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    return lanczos_extreme(h, which, opt).value;
}

double empirical_moment(const EmpiricalMeasure& m, int k) {
    if (k < 1) throw std::invalid_argument("empirical_moment requires k >= 1");
    if (m.eigenvalues.empty()) throw std::invalid_argument("empirical_moment: empty measure");
    double s = 0.0;
    for (double ev : m.eigenvalues) s += std::pow(ev, k);
    return s / static_cast<double>(m.eigenvalues.size());
}

HistogramView histogram(const std::vector<double>& values, int bins) {
    if (bins < 1) throw std::invalid_argument("histogram requires bins >= 1");
    if (values.empty()) throw std::invalid_argument("histogram: no values");
    const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
    double lo = *mn_it, hi = *mx_it;
    if (lo == hi) { lo -= 0.5; hi += 0.5; } // degenerate range: one unit-width window
    HistogramView hv;
    hv.edges.resize(bins + 1);
    const double width = (hi - lo) / bins;
    for (int b = 0; b <= bins; ++b) hv.edges[b] = lo + b * width;
    hv.counts.assign(bins, 0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++hv.counts[b];
    }
    hv.density.resize(bins);
    const double mass = static_cast<double>(values.size()) * width;
    for (int b = 0; b < bins; ++b) hv.density[b] = static_cast<double>(hv.counts[b]) / mass;
    return hv;
}

double ks_distance(const EmpiricalMeasure& m, const LimitDensity& d) {
    const std::size_t nn = m.eigenvalues.size();
    if (nn == 0) throw std::invalid_argument("ks_distance: empty measure");
    double ks = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
        double f = density_cdf(d, m.eigenvalues[i]);
        f = std::clamp(f, 0.0, 1.0);
        const double lo = static_cast<double>(i) / nn;       // F_emp just below lambda_i
        const double hi = static_cast<double>(i + 1) / nn;   // F_emp at lambda_i
        ks = std::max(ks, std::max(f - lo, hi - f));
    }
    return ks;
}

IntersectionStats intersection_statistics(int n, int q, std::uint64_t trials, std::uint64_t seed) {
    if (n < 1 || q < 1 || q > n)
        throw std::invalid_argument("intersection_statistics requires 1 <= q <= n");
    if (trials < 1) throw std::invalid_argument("intersection_statistics: trials >= 1");
    IntersectionStats st;
    st.n = n;
    st.q = q;
    st.trials = trials;
    st.counts.assign(q + 1, 0);

    std::mt19937_64 rng(seed);
    std::vector<int> pool(n);
    std::vector<char> in_first(n, 0);
    std::vector<int> first(q);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // partial Fisher-Yates: first q entries of a fresh shuffle
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int j = 0; j < q; ++j) {
            std::uniform_int_distribution<int> pick(j, n - 1);
            std::swap(pool[j], pool[pick(rng)]);
            first[j] = pool[j];
            in_first[pool[j]] = 1;
        }
        for (int i = 0; i < n; ++i) pool[i] = i;
        int overlap = 0;
        for (int j = 0; j < q; ++j) {
            std::uniform_int_distribution<int> pick(j, n - 1);
            std::swap(pool[j], pool[pick(rng)]);
            overlap += in_first[pool[j]];
        }
        ++st.counts[overlap];
        for (int j = 0; j < q; ++j) in_first[first[j]] = 0;
    }

    st.pmf.resize(q + 1);
    for (int j = 0; j <= q; ++j) {
        st.pmf[j] = static_cast<double>(st.counts[j]) / static_cast<double>(trials);
        st.mean += j * st.pmf[j];
    }
    // TV to Poisson(q^2/n) over all of N: tail beyond q is pure Poisson mass
    const double a = static_cast<double>(q) * q / n;
    double tv = 0.0, pois = std::exp(-a), tail = 1.0;
    for (int j = 0; j <= q; ++j) {
        tv += std::abs(st.pmf[j] - pois);
        tail -= pois;
        pois *= a / (j + 1);
    }
    st.tv_to_poisson = 0.5 * (tv + std::max(tail, 0.0));
    return st;
}

std::vector<EmpiricalMeasure> sample_spectra(int n, int q, Dist dist, int samples,
                                             std::uint64_t seed, const SpectrumOptions& opt) {
    if (samples < 1) throw std::invalid_argument("sample_spectra requires samples >= 1");
    std::vector<EmpiricalMeasure> out(samples);
    std::exception_ptr err; // exceptions must not escape the parallel region
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < samples; ++i) {
        try {
            const CouplingTensor tensor = sample_couplings(n, q, dist, derive_seed(seed, i));
            out[i] = full_spectrum(build_hamiltonian(tensor), opt);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<VarianceRow> moment_variance_scan(const std::vector<int>& ns, int q, int k,
                                              int samples, std::uint64_t seed,
                                              const SpectrumOptions& opt) {
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("moment_variance_scan requires even q >= 2");
    if (samples < 3) throw std::invalid_argument("moment_variance_scan requires samples >= 3");
    std::vector<VarianceRow> table;
    table.reserve(ns.size());
    for (int n : ns) {
        const auto spectra = sample_spectra(n, q, Dist::gaussian, samples,
                                            derive_seed(seed, static_cast<std::uint64_t>(n)), opt);
        std::vector<double> ms(samples);
        for (int i = 0; i < samples; ++i) ms[i] = empirical_moment(spectra[i], k);
        const double s = samples;
        double mean = 0.0;
        for (double v : ms) mean += v;
        mean /= s;
        double var = 0.0;
        for (double v : ms) var += (v - mean) * (v - mean);
        var /= (s - 1.0);
        // jackknife over leave-one-out variances
        std::vector<double> loo(samples);
        for (int i = 0; i < samples; ++i) {
            const double mean_i = (mean * s - ms[i]) / (s - 1.0);
            double v_i = 0.0;
            for (int j = 0; j < samples; ++j) {
                if (j == i) continue;
                v_i += (ms[j] - mean_i) * (ms[j] - mean_i);
            }
            loo[i] = v_i / (s - 2.0);
        }
        double loo_mean = 0.0;
        for (double v : loo) loo_mean += v;
        loo_mean /= s;
        double jk = 0.0;
        for (double v : loo) jk += (v - loo_mean) * (v - loo_mean);
        jk = std::sqrt((s - 1.0) / s * jk);
        VarianceRow row;
        row.n = n;
        row.variance = var;
        row.jackknife_error = jk;
        row.ratio_binom = var * binomial_d(n, q);
        row.samples = samples;
        table.push_back(row);
    }
    return table;
}

} // namespace syk
