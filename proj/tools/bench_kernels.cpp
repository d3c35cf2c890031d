// Kernel benchmarks: serial reference vs OpenMP matrix-free apply, plus the
// dense materialization path.  Not registered with ctest; build and run by
// hand when touching the kernels.
#include <benchmark/benchmark.h>

#include <complex>
#include <map>
#include <vector>

#include "syk/bits.hpp"
#include "syk/hamiltonian.hpp"
#include "syk/spectra.hpp"

using namespace syk;
using cplx = std::complex<double>;

namespace {

const Hamiltonian& cached_hamiltonian(int n) {
    static std::map<int, Hamiltonian> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_hamiltonian(sample_couplings(n, 4, Dist::gaussian,
                                                                 derive_seed(0xBE9CULL, n))))
                 .first;
    return it->second;
}

void bench_apply_serial(benchmark::State& state) {
    const auto& h = cached_hamiltonian(static_cast<int>(state.range(0)));
    std::vector<cplx> v(h.dim(), cplx{1.0, 0.5}), w(h.dim());
    for (auto _ : state) {
        apply_serial(h, v.data(), w.data());
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * h.dim() *
                            static_cast<std::int64_t>(h.terms.size()));
}

void bench_apply_parallel(benchmark::State& state) {
    const auto& h = cached_hamiltonian(static_cast<int>(state.range(0)));
    std::vector<cplx> v(h.dim(), cplx{1.0, 0.5}), w(h.dim());
    for (auto _ : state) {
        apply_parallel(h, v.data(), w.data());
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * h.dim() *
                            static_cast<std::int64_t>(h.terms.size()));
}

void bench_dense_build(benchmark::State& state) {
    const auto& h = cached_hamiltonian(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto m = dense_matrix(h);
        benchmark::DoNotOptimize(m.data());
    }
}

} // namespace

BENCHMARK(bench_apply_serial)->Arg(20)->Arg(24)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_apply_parallel)->Arg(20)->Arg(24)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_dense_build)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
